#pragma once

#include <optional>
#include <vector>

#include "cofin/cofin_set.hpp"
#include "cofin/rat.hpp"

namespace cofin {

struct Knot {
  Rat x;
  Rat y;

  friend bool operator==(const Knot&, const Knot&) = default;
};

/// A strictly increasing piecewise-linear bijection of the line with rational
/// data, kept in canonical minimal-knot form so that `==` is equality of maps.
///
/// With knots b_1 < ... < b_m (values v_1 < ... < v_m) the map is
/// v_1 + left_slope*(x - b_1) left of b_1, affine between consecutive knots,
/// and v_m + right_slope*(x - b_m) right of b_m. A map without knots is
/// affine; it stores slope (in both tail slopes) and intercept.
///
/// Composition is postfix throughout the library: in `compose(f, g)` and in
/// `f * g`, f acts first.
class PLHomeo {
 public:
  /// The identity map.
  PLHomeo() : left_slope_(1), right_slope_(1), intercept_(0) {}

  static PLHomeo identity() { return PLHomeo(); }

  /// x -> slope*x + intercept. Throws MonotonicityViolation unless slope > 0.
  static PLHomeo affine(Rat slope, Rat intercept);

  /// Builds and canonicalizes a map from a raw knot description, dropping
  /// every knot whose incident slopes agree. Throws MonotonicityViolation on
  /// a non-positive tail slope or non-increasing knot coordinates, and
  /// EmptyInput if `knots` is empty.
  static PLHomeo from_knots(Rat left_slope, std::vector<Knot> knots,
                            Rat right_slope);

  bool is_affine() const noexcept { return knots_.empty(); }
  bool is_identity() const;

  const std::vector<Knot>& knots() const noexcept { return knots_; }
  const Rat& left_slope() const noexcept { return left_slope_; }
  const Rat& right_slope() const noexcept { return right_slope_; }
  /// Only meaningful for affine maps; zero otherwise.
  const Rat& intercept() const noexcept { return intercept_; }

  Rat operator()(const Rat& x) const;
  /// The unique x with (*this)(x) == y.
  Rat preimage(const Rat& y) const;

  friend bool operator==(const PLHomeo&, const PLHomeo&) = default;

 private:
  std::vector<Knot> knots_;
  Rat left_slope_;
  Rat right_slope_;
  Rat intercept_;
};

Rat eval(const PLHomeo& f, const Rat& x);

/// x -> g(f(x)). Knot set is a subset of knots(f) and f^{-1}(knots(g)).
PLHomeo compose(const PLHomeo& f, const PLHomeo& g);
inline PLHomeo operator*(const PLHomeo& f, const PLHomeo& g) {
  return compose(f, g);
}

PLHomeo inverse(const PLHomeo& f);

/// Translation tails and affine interpolation between the i-th points of
/// `from` and `to`. Throws SizeMismatch if sizes differ and EmptyInput when
/// both are empty.
PLHomeo order_isomorphism(const CofinSet& from, const CofinSet& to);

/// Agrees with g on (lo, hi) and is the identity elsewhere; a missing bound
/// means the corresponding infinity. Throws EndpointNotFixed if g moves a
/// finite endpoint.
PLHomeo splice(const PLHomeo& g, const std::optional<Rat>& lo,
               const std::optional<Rat>& hi);

/// Pointwise image / preimage of a point set; order is preserved.
CofinSet image(const CofinSet& s, const PLHomeo& f);
CofinSet preimage(const CofinSet& s, const PLHomeo& f);

}  // namespace cofin
