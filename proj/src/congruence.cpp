#include "cofin/congruence.hpp"

#include "cofin/errors.hpp"

namespace cofin {

namespace {

void require_idempotent(const PHom& e) {
  if (!e.is_idempotent()) {
    throw NotIdempotent("action is defined on idempotents only");
  }
}

}  // namespace

PLHomeo gamma_of(const PHom& a) { return a.extension(); }

SigmaVerdict sigma_related(const PHom& a, const PHom& b) {
  if (gamma_of(a) != gamma_of(b)) {
    return {};
  }
  return {true, PHom::idempotent(unite(a.excluded(), b.excluded()))};
}

bool quotient_hom_check(const PHom& a, const PHom& b) {
  return gamma_of(a * b) == gamma_of(a) * gamma_of(b);
}

PHom conj_action(const PLHomeo& g, const PHom& e) {
  require_idempotent(e);
  return PHom::idempotent(image(e.excluded(), g));
}

PHom f_map(const PLHomeo& t, const PHom& e) {
  require_idempotent(e);
  return PHom::idempotent(preimage(e.excluded(), t));
}

GSPair to_pair(const PHom& a) { return {gamma_of(a), a.range_excluded()}; }

PHom from_pair(const GSPair& p) {
  return PHom(p.group, preimage(p.lattice, p.group));
}

GSPair pair_mul(const GSPair& p, const GSPair& q) {
  return {p.group * q.group, unite(image(p.lattice, q.group), q.lattice)};
}

DomainPair to_domain_pair(const PHom& a) { return {a.excluded(), gamma_of(a)}; }

PHom from_domain_pair(const DomainPair& p) { return PHom(p.group, p.lattice); }

DomainPair domain_pair_mul(const DomainPair& p, const DomainPair& q) {
  PHom moved = f_map(p.group, PHom::idempotent(q.lattice));
  return {unite(p.lattice, moved.excluded()), p.group * q.group};
}

GSPair to_range_pair(const DomainPair& p) {
  return {p.group, image(p.lattice, p.group)};
}

}  // namespace cofin
