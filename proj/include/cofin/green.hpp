#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "cofin/phom.hpp"

namespace cofin {

enum class GreenRelation { R, L, H, D, J };

std::optional<GreenRelation> parse_green_relation(std::string_view tag);
char to_char(GreenRelation rel);

/// R: equal domains. L: equal ranges. H: both. D and J: equal defects.
bool green_related(GreenRelation rel, const PHom& a, const PHom& b);

/// Membership in the two-sided ideal of elements with defect at least n.
bool in_ideal(std::size_t n, const PHom& a);

/// An element c with a R c and c L b, for a and b of equal defect: it has
/// a's domain and b's range. Throws DefectMismatch.
PHom d_class_bridge(const PHom& a, const PHom& b);

/// Splits an element of the group H-class of the idempotent on dom a into
/// its n+1 localizations, one per complementary interval, ordered left to
/// right. Each keeps a's excluded set and acts as a on its own interval and
/// as the identity elsewhere. Throws NotGroupHClass when dom a != ran a.
std::vector<PHom> localize(const PHom& a);

/// a == left * b * right.
struct Factorization {
  PHom left;
  PHom right;
};

/// Both factors share the common defect n of a and b. For n > 0, left is the
/// order isomorphism of excluded sets restricted to dom a and
/// right = b^{-1} left^{-1} a; for n == 0, left = a b^{-1} and right = 1.
/// Throws DefectMismatch.
Factorization factorize_same_defect(const PHom& a, const PHom& b);

/// The unit g with i == g e g^{-1} for D-equivalent idempotents i, e.
/// Throws NotIdempotent or DefectMismatch.
PLHomeo conjugator(const PHom& i, const PHom& e);

/// a == left * b * right with both factors units.
struct UnitFactorization {
  PLHomeo left;
  PLHomeo right;
};

/// left is the conjugator of the domain idempotents,
/// right = gamma_b^{-1} left^{-1} gamma_a. Throws DefectMismatch.
UnitFactorization factorize_by_units(const PHom& a, const PHom& b);

}  // namespace cofin
