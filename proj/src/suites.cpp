#include "cofin/suites.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "cofin/congruence.hpp"
#include "cofin/errors.hpp"
#include "cofin/green.hpp"
#include "cofin/text.hpp"

namespace cofin {

namespace {

using Inputs = std::vector<PHom>;

Outcome ok(bool holds) { return holds ? Outcome::Pass : Outcome::Fail; }

PHom U(const PLHomeo& g) { return PHom::unit(g); }

template <typename E, typename F>
bool throws(F&& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

// Points where two partial maps built from the given elements can differ:
// every knot, gap and gap image, their midpoints, and far-out probes.
std::vector<Rat> probe_points(std::initializer_list<const PHom*> elems) {
  std::vector<Rat> pts = {Rat(-1000), Rat(0), Rat(1000)};
  for (const PHom* a : elems) {
    for (const Rat& x : a->excluded()) pts.push_back(x);
    for (const Rat& y : a->range_excluded()) pts.push_back(y);
    for (const Knot& k : a->extension().knots()) {
      pts.push_back(k.x);
      pts.push_back(k.y);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::size_t n = pts.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    pts.push_back((pts[i] + pts[i + 1]) / Rat(2));
  }
  return pts;
}

std::optional<Rat> then_apply(const std::optional<Rat>& x, const PHom& a) {
  return x ? a(*x) : std::nullopt;
}

// ---------------------------------------------------------------- inverse-laws

std::vector<Property> inverse_law_properties() {
  std::vector<Property> ps;
  ps.push_back({"associativity",
                [](Generator& g) {
                  return Inputs{g.element(), g.element(), g.element()};
                },
                [](const Inputs& in) {
                  return ok((in[0] * in[1]) * in[2] == in[0] * (in[1] * in[2]));
                }});
  ps.push_back({"regularity",
                [](Generator& g) { return Inputs{g.element()}; },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  PHom ai = inverse(a);
                  return ok(a * ai * a == a && ai * a * ai == ai &&
                            inverse(ai) == a);
                }});
  ps.push_back({"idempotents-commute",
                [](Generator& g) {
                  return Inputs{g.element(), g.element(), g.idempotent(),
                                g.idempotent()};
                },
                [](const Inputs& in) {
                  PHom e = in[0] * inverse(in[0]);
                  PHom f = inverse(in[1]) * in[1];
                  const PHom& i = in[2];
                  const PHom& j = in[3];
                  return ok(e * f == f * e && i * j == j * i &&
                            (e * f) * (e * f) == e * f && e * i == i * e);
                }});
  ps.push_back({"inverse-of-product",
                [](Generator& g) { return Inputs{g.element(), g.element()}; },
                [](const Inputs& in) {
                  return ok(inverse(in[0] * in[1]) ==
                            inverse(in[1]) * inverse(in[0]));
                }});
  ps.push_back({"monoid-identity",
                [](Generator& g) { return Inputs{g.element()}; },
                [](const Inputs& in) {
                  const PHom one;
                  return ok(one * in[0] == in[0] && in[0] * one == in[0]);
                }});
  ps.push_back({"pointwise-composition",
                [](Generator& g) { return Inputs{g.element(), g.element()}; },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  PHom ab = a * b;
                  PHom ai = inverse(a);
                  for (const Rat& x : probe_points({&a, &b, &ab})) {
                    if (ab(x) != then_apply(a(x), b)) return Outcome::Fail;
                    auto y = a(x);
                    if (y && ai(*y) != x) return Outcome::Fail;
                  }
                  return Outcome::Pass;
                }});
  return ps;
}

// ------------------------------------------------------------------------ band

std::vector<Property> band_properties() {
  std::vector<Property> ps;
  ps.push_back({"idempotent-iff-identity-extension",
                [](Generator& g) { return Inputs{g.element(), g.idempotent()}; },
                [](const Inputs& in) {
                  for (const PHom& a : in) {
                    bool squares = a * a == a;
                    if (a.is_idempotent() != squares ||
                        a.is_idempotent() != a.extension().is_identity()) {
                      return Outcome::Fail;
                    }
                  }
                  return ok(in[1].is_idempotent());
                }});
  ps.push_back({"semilattice-isomorphism",
                [](Generator& g) {
                  return Inputs{g.idempotent(), g.idempotent(), g.element()};
                },
                [](const Inputs& in) {
                  const PHom& e = in[0];
                  const PHom& f = in[1];
                  if (!e.is_idempotent() || !f.is_idempotent()) {
                    return Outcome::Discard;
                  }
                  bool hom = to_semilattice(e * f) ==
                             unite(to_semilattice(e), to_semilattice(f));
                  bool round = from_semilattice(to_semilattice(e)) == e &&
                               to_semilattice(from_semilattice(f.excluded())) ==
                                   f.excluded();
                  bool unit = to_semilattice(PHom()).empty();
                  bool rejects = in[2].is_idempotent() ||
                                 throws<NotIdempotent>([&] {
                                   (void)to_semilattice(in[2]);
                                 });
                  return ok(hom && round && unit && rejects);
                }});
  ps.push_back({"strict-order-chain",
                [](Generator& g) {
                  PHom f = g.idempotent();
                  CofinSet extra = g.points(g.uniform(1, 3));
                  return Inputs{PHom::idempotent(unite(f.excluded(), extra)), f};
                },
                [](const Inputs& in) {
                  const PHom& e = in[0];
                  const PHom& f = in[1];
                  if (!e.is_idempotent() || !f.is_idempotent() ||
                      !natural_leq(e, f) || e == f) {
                    return Outcome::Discard;
                  }
                  if (!(to_semilattice(e).size() > to_semilattice(f).size())) {
                    return Outcome::Fail;
                  }
                  // refine f down to e one point at a time
                  PHom step = f;
                  for (const Rat& p : difference(e.excluded(), f.excluded())) {
                    PHom next = step * PHom::idempotent(CofinSet{p});
                    if (!natural_leq(next, step) || next == step ||
                        next.defect() != step.defect() + 1 ||
                        !next.is_idempotent()) {
                      return Outcome::Fail;
                    }
                    step = next;
                  }
                  return ok(step == e);
                }});
  ps.push_back({"natural-order-witness",
                [](Generator& g) {
                  PHom b = g.element();
                  PHom a = g.coin() ? PHom::idempotent(g.points()) * b
                                    : g.element();
                  return Inputs{a, b};
                },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  bool leq = natural_leq(a, b);
                  bool left_witness = PHom::idempotent(a.excluded()) * b == a;
                  bool right_witness =
                      b * PHom::idempotent(a.range_excluded()) == a;
                  bool generic = b * (inverse(a) * a) == a;
                  return ok(leq == left_witness && leq == right_witness &&
                            leq == generic);
                }});
  return ps;
}

// ---------------------------------------------------------------------- defect

std::vector<Property> defect_properties() {
  std::vector<Property> ps;
  ps.push_back({"domain-and-range-gaps-agree",
                [](Generator& g) { return Inputs{g.element()}; },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  CofinSet ran_gaps = a.range_excluded();
                  if (ran_gaps.size() != a.defect() ||
                      a.defect() != a.excluded().size()) {
                    return Outcome::Fail;
                  }
                  // a gap of the range has no defined preimage
                  PHom ai = inverse(a);
                  for (const Rat& y : ran_gaps) {
                    if (ai(y)) return Outcome::Fail;
                  }
                  return ok(ai.excluded() == ran_gaps);
                }});
  ps.push_back({"defect-subadditive",
                [](Generator& g) { return Inputs{g.element(), g.element()}; },
                [](const Inputs& in) {
                  return ok((in[0] * in[1]).defect() <=
                            in[0].defect() + in[1].defect());
                }});
  ps.push_back({"ideal-closure",
                [](Generator& g) { return Inputs{g.element(), g.element()}; },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& x = in[1];
                  if (!in_ideal(0, a) || !in_ideal(0, x)) return Outcome::Fail;
                  for (std::size_t n = 0; n <= a.defect() + 1; ++n) {
                    if (in_ideal(n, a) != (a.defect() >= n)) return Outcome::Fail;
                    if (in_ideal(n, a) &&
                        (!in_ideal(n, a * x) || !in_ideal(n, x * a))) {
                      return Outcome::Fail;
                    }
                  }
                  return Outcome::Pass;
                }});
  return ps;
}

// ------------------------------------------------------------- green-witnesses

Inputs green_pair(Generator& g) {
  PHom a = g.element();
  switch (g.uniform(0, 4)) {
    case 0:
      return {a, g.element()};
    case 1:
      return {a, PHom(g.unit(), a.excluded())};
    case 2: {
      PLHomeo h = g.unit();
      return {a, PHom(h, preimage(a.range_excluded(), h))};
    }
    case 3: {
      PLHomeo h = gamma_of(a) * g.unit_fixing(a.range_excluded());
      return {a, PHom(h, a.excluded())};
    }
    default:
      return {a, g.element_with_defect(a.defect())};
  }
}

bool r_witness(const PHom& a, const PHom& b) {
  return a * (inverse(a) * b) == b && b * (inverse(b) * a) == a;
}

bool l_witness(const PHom& a, const PHom& b) {
  return (b * inverse(a)) * a == b && (a * inverse(b)) * b == a;
}

std::vector<Property> green_properties() {
  std::vector<Property> ps;
  ps.push_back({"R-by-multiplication", green_pair, [](const Inputs& in) {
                  return ok(green_related(GreenRelation::R, in[0], in[1]) ==
                            r_witness(in[0], in[1]));
                }});
  ps.push_back({"L-by-multiplication", green_pair, [](const Inputs& in) {
                  return ok(green_related(GreenRelation::L, in[0], in[1]) ==
                            l_witness(in[0], in[1]));
                }});
  ps.push_back({"H-is-R-and-L", green_pair, [](const Inputs& in) {
                  bool h = green_related(GreenRelation::H, in[0], in[1]);
                  return ok(h == (r_witness(in[0], in[1]) &&
                                  l_witness(in[0], in[1])));
                }});
  ps.push_back({"D-bridge", green_pair, [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  if (!green_related(GreenRelation::D, a, b)) {
                    return ok(a.defect() != b.defect() &&
                              throws<DefectMismatch>(
                                  [&] { (void)d_class_bridge(a, b); }));
                  }
                  PHom c = d_class_bridge(a, b);
                  return ok(r_witness(a, c) && l_witness(c, b) &&
                            green_related(GreenRelation::R, a, c) &&
                            green_related(GreenRelation::L, c, b));
                }});
  ps.push_back({"J-equals-D", green_pair, [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  bool j = green_related(GreenRelation::J, a, b);
                  if (j != green_related(GreenRelation::D, a, b)) {
                    return Outcome::Fail;
                  }
                  if (!j) {
                    return ok(throws<DefectMismatch>(
                        [&] { (void)factorize_same_defect(a, b); }));
                  }
                  // a in S b S and b in S a S
                  Factorization ab = factorize_same_defect(a, b);
                  Factorization ba = factorize_same_defect(b, a);
                  return ok(ab.left * b * ab.right == a &&
                            ba.left * a * ba.right == b);
                }});
  return ps;
}

// -------------------------------------------------------------- factorizations

Inputs same_defect_pair(Generator& g) {
  PHom a = g.element();
  return {a, g.element_with_defect(a.defect())};
}

std::vector<Property> factorization_properties() {
  std::vector<Property> ps;
  ps.push_back({"same-defect-factorization", same_defect_pair,
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  if (a.defect() != b.defect()) return Outcome::Discard;
                  Factorization f = factorize_same_defect(a, b);
                  return ok(f.left * b * f.right == a &&
                            f.left.defect() == a.defect() &&
                            f.right.defect() == a.defect());
                }});
  ps.push_back({"idempotent-conjugator",
                [](Generator& g) {
                  CofinSet p = g.points();
                  return Inputs{PHom::idempotent(p),
                                PHom::idempotent(g.points(p.size()))};
                },
                [](const Inputs& in) {
                  const PHom& i = in[0];
                  const PHom& e = in[1];
                  if (!i.is_idempotent() || !e.is_idempotent() ||
                      i.defect() != e.defect()) {
                    return Outcome::Discard;
                  }
                  PLHomeo c = conjugator(i, e);
                  if (image(i.excluded(), c) != e.excluded()) {
                    return Outcome::Fail;
                  }
                  return ok(U(c) * e * U(inverse(c)) == i);
                }});
  ps.push_back({"unit-factorization", same_defect_pair, [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  if (a.defect() != b.defect()) return Outcome::Discard;
                  UnitFactorization f = factorize_by_units(a, b);
                  return ok(U(f.left) * b * U(f.right) == a);
                }});
  ps.push_back({"defect-mismatch-rejected",
                [](Generator& g) {
                  PHom a = g.element();
                  PHom b = a.defect() < g.bounds().max_defect
                               ? g.element_with_defect(a.defect() + 1)
                               : g.element_with_defect(0);
                  return Inputs{a, b};
                },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  if (a.defect() == b.defect()) return Outcome::Discard;
                  PHom i = a * inverse(a);
                  PHom e = b * inverse(b);
                  return ok(
                      throws<DefectMismatch>(
                          [&] { (void)factorize_same_defect(a, b); }) &&
                      throws<DefectMismatch>(
                          [&] { (void)factorize_by_units(a, b); }) &&
                      throws<DefectMismatch>([&] { (void)conjugator(i, e); }));
                }});
  return ps;
}

// ----------------------------------------------------------------------- gamma

std::vector<Property> gamma_properties() {
  std::vector<Property> ps;
  ps.push_back({"gamma-factorization",
                [](Generator& g) { return Inputs{g.element()}; },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  PHom gamma = U(gamma_of(a));
                  return ok((a * inverse(a)) * gamma == a &&
                            gamma * (inverse(a) * a) == a);
                }});
  ps.push_back({"gamma-extends-pointwise",
                [](Generator& g) { return Inputs{g.element()}; },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  PLHomeo gamma = gamma_of(a);
                  for (const Rat& x : probe_points({&a})) {
                    auto y = a(x);
                    if (y && *y != gamma(x)) return Outcome::Fail;
                  }
                  // the i-th gap of the domain goes to the i-th gap of the range
                  CofinSet ran = a.range_excluded();
                  for (std::size_t i = 0; i < a.defect(); ++i) {
                    if (gamma(a.excluded()[i]) != ran[i]) return Outcome::Fail;
                  }
                  return Outcome::Pass;
                }});
  ps.push_back({"gamma-inverse-condition",
                [](Generator& g) { return Inputs{g.element()}; },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  PHom gi = U(inverse(gamma_of(a)));
                  return ok(a * gi == a * inverse(a) &&
                            gi * a == inverse(a) * a);
                }});
  ps.push_back({"factorizable",
                [](Generator& g) { return Inputs{g.element()}; },
                [](const Inputs& in) {
                  return ok(natural_leq(in[0], U(gamma_of(in[0]))));
                }});
  ps.push_back({"unique-comparable-unit",
                [](Generator& g) {
                  PHom a = g.element();
                  // near misses share a's values on a gap-free piece
                  PHom u = g.coin() ? U(g.unit())
                                    : U(gamma_of(a) * g.unit_fixing(g.points(1)));
                  return Inputs{a, u};
                },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& u = in[1];
                  if (!u.is_unit() || u.extension() == gamma_of(a)) {
                    return Outcome::Discard;
                  }
                  return ok(!natural_leq(a, u) && !natural_leq(u, a));
                }});
  return ps;
}

// -------------------------------------------------------------- sigma-quotient

Inputs sigma_pair(Generator& g) {
  PHom a = g.element();
  PHom b = g.coin() ? PHom(gamma_of(a), g.points()) : g.element();
  return {a, b, g.element()};
}

std::vector<Property> sigma_properties() {
  std::vector<Property> ps;
  ps.push_back({"sigma-iff-equal-gamma", sigma_pair, [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  SigmaVerdict v = sigma_related(a, b);
                  if (v.related != (gamma_of(a) == gamma_of(b))) {
                    return Outcome::Fail;
                  }
                  PHom candidate =
                      PHom::idempotent(unite(a.excluded(), b.excluded()));
                  if (!v.related) {
                    return ok(!v.witness && candidate * a != candidate * b);
                  }
                  return ok(v.witness && v.witness->is_idempotent() &&
                            *v.witness * a == *v.witness * b);
                }});
  ps.push_back({"sigma-is-congruence", sigma_pair, [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  const PHom& c = in[2];
                  if (!sigma_related(a, b).related) {
                    return Outcome::Pass;
                  }
                  return ok(sigma_related(a * c, b * c).related &&
                            sigma_related(c * a, c * b).related &&
                            sigma_related(inverse(a), inverse(b)).related);
                }});
  ps.push_back({"quotient-homomorphism", sigma_pair, [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  return ok(quotient_hom_check(a, b) &&
                            quotient_hom_check(b, in[2]) &&
                            gamma_of(inverse(a)) == inverse(gamma_of(a)) &&
                            gamma_of(a * inverse(a)).is_identity());
                }});
  ps.push_back({"f-inverse-maximum",
                [](Generator& g) { return Inputs{g.element(), g.idempotent()}; },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& e = in[1];
                  if (!e.is_idempotent()) return Outcome::Discard;
                  PHom top = U(gamma_of(a));
                  PHom member = e * top;
                  return ok(sigma_related(a, member).related &&
                            natural_leq(member, top) && natural_leq(a, top) &&
                            sigma_related(a, top).related);
                }});
  return ps;
}

// ---------------------------------------------------------------- localization

Inputs h_class_pair(Generator& g) {
  CofinSet gaps = g.points();
  return {g.in_h_class(gaps), g.in_h_class(gaps)};
}

bool in_group_class(const PHom& a) { return a.range_excluded() == a.excluded(); }

std::vector<Property> localization_properties() {
  std::vector<Property> ps;
  ps.push_back({"product-in-every-order", h_class_pair, [](const Inputs& in) {
                  const PHom& a = in[0];
                  if (!in_group_class(a)) return Outcome::Discard;
                  std::vector<PHom> parts = localize(a);
                  if (parts.size() != a.defect() + 1) return Outcome::Fail;
                  std::vector<std::size_t> order(parts.size());
                  std::iota(order.begin(), order.end(), 0);
                  std::size_t tried = 0;
                  do {
                    PHom product = parts[order[0]];
                    for (std::size_t k = 1; k < order.size(); ++k) {
                      product = product * parts[order[k]];
                    }
                    if (product != a) return Outcome::Fail;
                  } while (std::next_permutation(order.begin(), order.end()) &&
                           ++tried < 720);
                  return Outcome::Pass;
                }});
  ps.push_back({"parts-commute-and-stay-local", h_class_pair,
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  if (!in_group_class(a)) return Outcome::Discard;
                  std::vector<PHom> parts = localize(a);
                  const CofinSet& gaps = a.excluded();
                  std::vector<Rat> probes = probe_points({&a});
                  for (std::size_t i = 0; i < parts.size(); ++i) {
                    if (!green_related(GreenRelation::H, parts[i], a)) {
                      return Outcome::Fail;
                    }
                    if (a.is_idempotent() && parts[i] != a) return Outcome::Fail;
                    for (std::size_t j = i + 1; j < parts.size(); ++j) {
                      if (parts[i] * parts[j] != parts[j] * parts[i]) {
                        return Outcome::Fail;
                      }
                    }
                    for (const Rat& x : probes) {
                      bool inside = (i == 0 || gaps[i - 1] < x) &&
                                    (i == gaps.size() || x < gaps[i]);
                      auto want = inside ? a(x)
                                         : (gaps.contains(x) ? std::nullopt
                                                             : std::optional(x));
                      if (parts[i](x) != want) return Outcome::Fail;
                    }
                  }
                  return Outcome::Pass;
                }});
  ps.push_back({"localization-multiplicative", h_class_pair,
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  if (!in_group_class(a) || !in_group_class(b) ||
                      a.excluded() != b.excluded()) {
                    return Outcome::Discard;
                  }
                  std::vector<PHom> pa = localize(a);
                  std::vector<PHom> pb = localize(b);
                  std::vector<PHom> pab = localize(a * b);
                  for (std::size_t k = 0; k < pab.size(); ++k) {
                    if (pab[k] != pa[k] * pb[k]) return Outcome::Fail;
                  }
                  return ok(localize(inverse(a))[0] == inverse(pa[0]));
                }});
  ps.push_back({"outside-group-class-rejected",
                [](Generator& g) { return Inputs{g.element()}; },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  if (in_group_class(a)) return Outcome::Discard;
                  return ok(throws<NotGroupHClass>([&] { (void)localize(a); }));
                }});
  return ps;
}

// ------------------------------------------------------------------- semidirect

std::vector<Property> semidirect_properties() {
  std::vector<Property> ps;
  ps.push_back({"pair-encoding-is-isomorphism",
                [](Generator& g) {
                  return Inputs{g.element(), g.element(), g.element()};
                },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  GSPair pa = to_pair(a);
                  GSPair pb = to_pair(b);
                  GSPair free{in[2].extension(), in[2].excluded()};
                  return ok(from_pair(pa * pb) == a * b &&
                            from_pair(pa) == a &&
                            to_pair(from_pair(free)) == free &&
                            pa.group == gamma_of(a) &&
                            PHom::idempotent(pa.lattice) == inverse(a) * a);
                }});
  ps.push_back({"pair-product-laws",
                [](Generator& g) {
                  return Inputs{g.element(), g.element(), g.element(),
                                g.idempotent(), g.idempotent()};
                },
                [](const Inputs& in) {
                  auto free = [](const PHom& x) {
                    return GSPair{x.extension(), x.excluded()};
                  };
                  GSPair p = free(in[0]);
                  GSPair q = free(in[1]);
                  GSPair r = free(in[2]);
                  GSPair one{PLHomeo(), CofinSet()};
                  GSPair e{PLHomeo(), in[3].excluded()};
                  GSPair f{PLHomeo(), in[4].excluded()};
                  return ok((p * q) * r == p * (q * r) && one * p == p &&
                            p * one == p &&
                            e * f == GSPair{PLHomeo(),
                                            unite(e.lattice, f.lattice)});
                }});
  ps.push_back({"domain-pair-encoding",
                [](Generator& g) { return Inputs{g.element(), g.element()}; },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  const PHom& b = in[1];
                  DomainPair da = to_domain_pair(a);
                  DomainPair db = to_domain_pair(b);
                  DomainPair dab = domain_pair_mul(da, db);
                  return ok(from_domain_pair(dab) == a * b &&
                            from_domain_pair(da) == a &&
                            PHom::idempotent(da.lattice) == a * inverse(a) &&
                            to_range_pair(da) == to_pair(a) &&
                            to_range_pair(dab) ==
                                to_range_pair(da) * to_range_pair(db));
                }});
  ps.push_back({"conjugation-action",
                [](Generator& g) {
                  return Inputs{U(g.unit()), U(g.unit()), g.idempotent(),
                                g.idempotent()};
                },
                [](const Inputs& in) {
                  if (!in[0].is_unit() || !in[1].is_unit() ||
                      !in[2].is_idempotent() || !in[3].is_idempotent()) {
                    return Outcome::Discard;
                  }
                  const PLHomeo& g = in[0].extension();
                  const PLHomeo& h = in[1].extension();
                  const PHom& e = in[2];
                  const PHom& f = in[3];
                  PHom ge = conj_action(g, e);
                  return ok(
                      ge == U(inverse(g)) * e * U(g) &&
                      conj_action(g, e * f) == ge * conj_action(g, f) &&
                      conj_action(inverse(g), ge) == e &&
                      conj_action(h, ge) == conj_action(g * h, e) &&
                      conj_action(PLHomeo(), e) == e && ge.is_idempotent() &&
                      (conj_action(g, f) == ge) == (f == e));
                }});
  ps.push_back({"f-inverse-structure-maps",
                [](Generator& g) {
                  return Inputs{U(g.unit()), U(g.unit()), g.idempotent(),
                                g.idempotent()};
                },
                [](const Inputs& in) {
                  if (!in[0].is_unit() || !in[1].is_unit() ||
                      !in[2].is_idempotent() || !in[3].is_idempotent()) {
                    return Outcome::Discard;
                  }
                  const PLHomeo& u = in[0].extension();
                  const PLHomeo& v = in[1].extension();
                  const PHom& e = in[2];
                  const PHom& f = in[3];
                  const PHom one;
                  // unit of the semilattice
                  bool unit_ok = e * one == e && one * e == e && one.is_idempotent();
                  // units form a group; t t^{-1} = 1 so every e_t is trivial
                  PHom uv = U(u) * U(v);
                  bool group_ok = uv.is_unit() && gamma_of(uv) == u * v &&
                                  U(u) * U(inverse(u)) == one &&
                                  U(inverse(u)) * U(u) == one;
                  // F_t(e) = t e t^{-1}: homomorphic, onto, F_1 = id, F_t(1) = e_t = 1
                  PHom fu = f_map(u, e);
                  bool map_ok = fu == U(u) * e * U(inverse(u)) &&
                                fu == conj_action(inverse(u), e) &&
                                f_map(u, e * f) == fu * f_map(u, f) &&
                                f_map(u, f_map(inverse(u), e)) == e &&
                                f_map(PLHomeo(), e) == e && f_map(u, one) == one;
                  // composite law in postfix order: F_u after F_v is F_{uv}
                  bool composite_ok =
                      f_map(u, f_map(v, one)) * f_map(u * v, e) ==
                      f_map(u, f_map(v, e));
                  return ok(unit_ok && group_ok && map_ok && composite_ok);
                }});
  return ps;
}

// ------------------------------------------------------------------ round-trip

std::vector<Property> round_trip_properties() {
  std::vector<Property> ps;
  ps.push_back({"parse-format-round-trip",
                [](Generator& g) { return Inputs{g.element()}; },
                [](const Inputs& in) {
                  const PHom& a = in[0];
                  std::string text = format(a);
                  GSPair p = to_pair(a);
                  return ok(parse_element(text) == a &&
                            format(parse_element(text)) == text &&
                            parse_pl(format(a.extension())) == a.extension() &&
                            parse_pair(format(p)) == p);
                }});
  return ps;
}

std::vector<Suite> build_suites() {
  return {
      {"inverse-laws", "inverse monoid axioms", inverse_law_properties()},
      {"band", "idempotents and the free semilattice", band_properties()},
      {"defect", "defect count, subadditivity, ideals", defect_properties()},
      {"green-witnesses", "Green's relations with constructive witnesses",
       green_properties()},
      {"factorizations", "same-defect, conjugator and unit factorizations",
       factorization_properties()},
      {"gamma", "unit extension and factorizability", gamma_properties()},
      {"sigma-quotient", "minimum group congruence and F-inverse property",
       sigma_properties()},
      {"localization", "localizations in group H-classes",
       localization_properties()},
      {"semidirect", "semidirect-product encodings", semidirect_properties()},
      {"round-trip", "text format round trip", round_trip_properties()},
  };
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Outcome run_check(const Property& p, const Inputs& in, std::string* reason) {
  try {
    return p.check(in);
  } catch (const std::exception& e) {
    if (reason) *reason = std::string("unexpected exception: ") + e.what();
    return Outcome::Fail;
  }
}

constexpr std::size_t kMaxReportedFailures = 3;
constexpr std::size_t kMaxShrinkSteps = 200;

}  // namespace

const std::vector<Suite>& registered_suites() {
  static const std::vector<Suite> suites = build_suites();
  return suites;
}

const Suite* find_suite(const std::string& name) {
  for (const Suite& s : registered_suites()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const PropertyResult& p : properties) n += p.failed;
  return n;
}

std::vector<PHom> minimize(const Property& property, std::vector<PHom> inputs) {
  std::size_t steps = 0;
  bool improved = true;
  while (improved && steps < kMaxShrinkSteps) {
    improved = false;
    for (std::size_t i = 0; i < inputs.size() && !improved; ++i) {
      for (PHom& candidate : shrink_candidates(inputs[i])) {
        std::vector<PHom> trial = inputs;
        trial[i] = std::move(candidate);
        if (run_check(property, trial, nullptr) == Outcome::Fail) {
          inputs = std::move(trial);
          improved = true;
          ++steps;
          break;
        }
      }
    }
  }
  return inputs;
}

SuiteReport run_suite(const Suite& suite, const SuiteConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = suite.name;
  report.cases = cfg.cases;
  for (const Property& p : suite.properties) {
    PropertyResult result;
    result.name = p.name;
    std::uint64_t stream = fnv1a(suite.name + "/" + p.name);
    for (std::size_t i = 0; i < cfg.cases; ++i) {
      Generator gen(derive_seed(cfg.seed, stream, i), cfg.bounds);
      Inputs inputs = p.generate(gen);
      std::string reason;
      switch (run_check(p, inputs, &reason)) {
        case Outcome::Pass:
          ++result.passed;
          break;
        case Outcome::Discard:
          ++result.discarded;
          break;
        case Outcome::Fail:
          ++result.failed;
          if (result.failures.size() < kMaxReportedFailures) {
            result.failures.push_back({i, reason, minimize(p, inputs)});
          }
          break;
      }
    }
    report.properties.push_back(std::move(result));
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::vector<SuiteReport> run_suites(const SuiteConfig& cfg) {
  std::vector<SuiteReport> reports;
  if (cfg.suite == "all") {
    for (const Suite& s : registered_suites()) {
      reports.push_back(run_suite(s, cfg));
    }
    return reports;
  }
  const Suite* s = find_suite(cfg.suite);
  if (!s) {
    throw UnknownSuite("unknown suite '" + cfg.suite + "'");
  }
  reports.push_back(run_suite(*s, cfg));
  return reports;
}

std::string render(const std::vector<SuiteReport>& reports,
                   const SuiteConfig& cfg) {
  std::ostringstream out;
  out << "seed " << cfg.seed << ", " << cfg.cases << " cases, max-defect "
      << cfg.bounds.max_defect << ", max-knots " << cfg.bounds.max_knots
      << ", coeff-bound " << cfg.bounds.coeff_bound << "\n";
  std::size_t total = 0;
  for (const SuiteReport& r : reports) {
    out << "suite " << r.suite << ": "
        << (r.failures() == 0 ? "ok" : "FAILED") << "\n";
    for (const PropertyResult& p : r.properties) {
      out << "  " << p.name << ": " << p.passed << " passed, " << p.discarded
          << " discarded, " << p.failed << " failed\n";
      for (const Failure& f : p.failures) {
        out << "    counterexample (case " << f.case_index << ")";
        if (!f.reason.empty()) out << " " << f.reason;
        out << ":\n";
        for (const PHom& a : f.minimized) {
          out << "      " << format(a) << "\n";
        }
      }
    }
    total += r.failures();
  }
  out << (total == 0 ? "all properties hold" : "failures: " + std::to_string(total))
      << "\n";
  return out.str();
}

}  // namespace cofin
