#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cofin/phom.hpp"

namespace cofin {

struct GeneratorBounds {
  std::size_t max_defect = 4;
  std::size_t max_knots = 3;
  long coeff_bound = 12;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Independent sub-seed for case `index` of stream `stream`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t index);

/// Random elements with small exact coordinates: numerators in
/// [-coeff_bound, coeff_bound], denominators in [1, 4], slopes drawn from
/// {1/3, 1/2, 1, 2, 3}.
class Generator {
 public:
  Generator(std::uint64_t seed, GeneratorBounds bounds);

  const GeneratorBounds& bounds() const noexcept { return bounds_; }
  std::mt19937_64& engine() noexcept { return rng_; }

  /// Uniform on [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi);
  bool coin();

  Rat rational();
  Rat slope();

  /// n distinct points.
  CofinSet points(std::size_t n);
  /// Size uniform in [0, max_defect].
  CofinSet points();

  /// Raw knot count uniform in [0, max_knots].
  PLHomeo unit();
  /// A unit fixing every point of `fixed`.
  PLHomeo unit_fixing(const CofinSet& fixed);

  PHom element();
  PHom element_with_defect(std::size_t n);
  PHom idempotent();
  /// Random member of the group H-class of the idempotent excluding `gaps`.
  PHom in_h_class(const CofinSet& gaps);

 private:
  std::mt19937_64 rng_;
  GeneratorBounds bounds_;
};

/// Rational truncated toward zero.
Rat truncate(const Rat& r);

/// Simpler variants of a value, each a valid canonical element: fewer
/// excluded points, fewer knots, coefficients pulled toward 0 and 1.
std::vector<PLHomeo> shrink_candidates(const PLHomeo& f);
std::vector<PHom> shrink_candidates(const PHom& a);

}  // namespace cofin
