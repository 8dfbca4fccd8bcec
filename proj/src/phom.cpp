#include "cofin/phom.hpp"

#include "cofin/errors.hpp"

namespace cofin {

std::optional<Rat> PHom::operator()(const Rat& x) const {
  if (excluded_.contains(x)) {
    return std::nullopt;
  }
  return extension_(x);
}

std::optional<Rat> apply(const PHom& a, const Rat& x) { return a(x); }

PHom compose(const PHom& a, const PHom& b) {
  return PHom(compose(a.extension(), b.extension()),
              unite(a.excluded(), preimage(b.excluded(), a.extension())));
}

PHom inverse(const PHom& a) {
  return PHom(inverse(a.extension()), a.range_excluded());
}

bool natural_leq(const PHom& a, const PHom& b) {
  return a.extension() == b.extension() && a.excluded().includes(b.excluded());
}

CofinSet to_semilattice(const PHom& e) {
  if (!e.is_idempotent()) {
    throw NotIdempotent("semilattice map needs an idempotent");
  }
  return e.excluded();
}

PHom from_semilattice(const CofinSet& gaps) { return PHom::idempotent(gaps); }

}  // namespace cofin
