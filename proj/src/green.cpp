#include "cofin/green.hpp"

#include <string>

#include "cofin/errors.hpp"

namespace cofin {

namespace {

void require_same_defect(const PHom& a, const PHom& b) {
  if (a.defect() != b.defect()) {
    throw DefectMismatch("defects differ: " + std::to_string(a.defect()) +
                         " vs " + std::to_string(b.defect()));
  }
}

PLHomeo iso_or_identity(const CofinSet& from, const CofinSet& to) {
  return from.empty() ? PLHomeo() : order_isomorphism(from, to);
}

}  // namespace

std::optional<GreenRelation> parse_green_relation(std::string_view tag) {
  if (tag == "R") return GreenRelation::R;
  if (tag == "L") return GreenRelation::L;
  if (tag == "H") return GreenRelation::H;
  if (tag == "D") return GreenRelation::D;
  if (tag == "J") return GreenRelation::J;
  return std::nullopt;
}

char to_char(GreenRelation rel) {
  switch (rel) {
    case GreenRelation::R: return 'R';
    case GreenRelation::L: return 'L';
    case GreenRelation::H: return 'H';
    case GreenRelation::D: return 'D';
    case GreenRelation::J: return 'J';
  }
  return '?';
}

bool green_related(GreenRelation rel, const PHom& a, const PHom& b) {
  switch (rel) {
    case GreenRelation::R:
      return a.excluded() == b.excluded();
    case GreenRelation::L:
      return a.range_excluded() == b.range_excluded();
    case GreenRelation::H:
      return a.excluded() == b.excluded() &&
             a.range_excluded() == b.range_excluded();
    case GreenRelation::D:
    case GreenRelation::J:
      return a.defect() == b.defect();
  }
  return false;
}

bool in_ideal(std::size_t n, const PHom& a) { return a.defect() >= n; }

PHom d_class_bridge(const PHom& a, const PHom& b) {
  require_same_defect(a, b);
  return PHom(iso_or_identity(a.excluded(), b.range_excluded()), a.excluded());
}

std::vector<PHom> localize(const PHom& a) {
  const CofinSet& gaps = a.excluded();
  if (a.range_excluded() != gaps) {
    throw NotGroupHClass("localization needs dom a == ran a");
  }
  std::vector<PHom> parts;
  parts.reserve(gaps.size() + 1);
  for (std::size_t i = 0; i <= gaps.size(); ++i) {
    std::optional<Rat> lo;
    std::optional<Rat> hi;
    if (i > 0) lo = gaps[i - 1];
    if (i < gaps.size()) hi = gaps[i];
    parts.emplace_back(splice(a.extension(), lo, hi), gaps);
  }
  return parts;
}

Factorization factorize_same_defect(const PHom& a, const PHom& b) {
  require_same_defect(a, b);
  if (a.defect() == 0) {
    return {a * inverse(b), PHom::identity()};
  }
  PHom eta(order_isomorphism(a.excluded(), b.excluded()), a.excluded());
  PHom right = inverse(b) * inverse(eta) * a;
  return {std::move(eta), std::move(right)};
}

PLHomeo conjugator(const PHom& i, const PHom& e) {
  if (!i.is_idempotent() || !e.is_idempotent()) {
    throw NotIdempotent("conjugator needs two idempotents");
  }
  require_same_defect(i, e);
  return iso_or_identity(i.excluded(), e.excluded());
}

UnitFactorization factorize_by_units(const PHom& a, const PHom& b) {
  require_same_defect(a, b);
  PLHomeo xi = conjugator(a * inverse(a), b * inverse(b));
  PLHomeo right = inverse(b.extension()) * inverse(xi) * a.extension();
  return {std::move(xi), std::move(right)};
}

}  // namespace cofin
