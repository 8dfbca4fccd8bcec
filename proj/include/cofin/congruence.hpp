#pragma once

#include <optional>

#include "cofin/phom.hpp"

namespace cofin {

/// The unique unit above a in the natural order (its global extension).
/// It is the image of a under the quotient by the minimum group congruence.
PLHomeo gamma_of(const PHom& a);

struct SigmaVerdict {
  bool related = false;
  /// Present iff related: an idempotent e with e*a == e*b.
  std::optional<PHom> witness;
};

/// Minimum group congruence: related iff the extensions agree. The witness
/// excludes the union of both excluded sets.
SigmaVerdict sigma_related(const PHom& a, const PHom& b);

/// gamma_of(a*b) == gamma_of(a) * gamma_of(b).
bool quotient_hom_check(const PHom& a, const PHom& b);

/// e -> g^{-1} e g on idempotents; excludes the image of excluded(e) under g.
/// Throws NotIdempotent.
PHom conj_action(const PLHomeo& g, const PHom& e);

/// e -> t e t^{-1} on idempotents; excludes the preimage of excluded(e)
/// under t. Throws NotIdempotent.
PHom f_map(const PLHomeo& t, const PHom& e);

/// Semidirect-product encoding a -> (gamma_a, a^{-1}a), the idempotent kept
/// as its excluded set.
struct GSPair {
  PLHomeo group;
  CofinSet lattice;

  friend bool operator==(const GSPair&, const GSPair&) = default;
};

GSPair to_pair(const PHom& a);
/// The unique element with the given pair: extension g, range gaps B.
PHom from_pair(const GSPair& p);
/// (g, A)(h, B) = (gh, h(A) u B).
GSPair pair_mul(const GSPair& p, const GSPair& q);
inline GSPair operator*(const GSPair& p, const GSPair& q) {
  return pair_mul(p, q);
}

/// Encoding s -> (s s^{-1}, t_s) by the domain idempotent and the maximum of
/// the sigma-class.
struct DomainPair {
  CofinSet lattice;
  PLHomeo group;

  friend bool operator==(const DomainPair&, const DomainPair&) = default;
};

DomainPair to_domain_pair(const PHom& a);
PHom from_domain_pair(const DomainPair& p);
/// (f, u) o (g, v) = (f * F_u(g), u * v).
DomainPair domain_pair_mul(const DomainPair& p, const DomainPair& q);
/// (f, u) -> (u, u(f)).
GSPair to_range_pair(const DomainPair& p);

}  // namespace cofin
