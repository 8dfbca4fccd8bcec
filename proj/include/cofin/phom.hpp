#pragma once

#include <cstddef>
#include <optional>

#include "cofin/cofin_set.hpp"
#include "cofin/pl_homeo.hpp"

namespace cofin {

/// A monotone co-finite partial homeomorphism of the line.
///
/// Stored as its unique global extension together with the finite set of
/// points excluded from the domain. The range is the complement of the image
/// of that set under the extension; it is derived, never stored. Two values
/// are equal exactly when they are the same partial map.
class PHom {
 public:
  /// The monoid identity.
  PHom() = default;
  PHom(PLHomeo extension, CofinSet excluded)
      : extension_(std::move(extension)), excluded_(std::move(excluded)) {}

  static PHom identity() { return PHom(); }
  /// A group element (defect zero).
  static PHom unit(PLHomeo g) { return PHom(std::move(g), CofinSet()); }
  /// The identity on the complement of `gaps`.
  static PHom idempotent(CofinSet gaps) {
    return PHom(PLHomeo(), std::move(gaps));
  }

  const PLHomeo& extension() const noexcept { return extension_; }
  /// Complement of the domain.
  const CofinSet& excluded() const noexcept { return excluded_; }
  /// Complement of the range.
  CofinSet range_excluded() const { return image(excluded_, extension_); }

  /// Undefined (nullopt) exactly on the excluded points.
  std::optional<Rat> operator()(const Rat& x) const;

  bool is_idempotent() const { return extension_.is_identity(); }
  bool is_unit() const { return excluded_.empty(); }
  std::size_t defect() const noexcept { return excluded_.size(); }

  friend bool operator==(const PHom&, const PHom&) = default;

 private:
  PLHomeo extension_;
  CofinSet excluded_;
};

std::optional<Rat> apply(const PHom& a, const Rat& x);

/// a acts first, then b.
PHom compose(const PHom& a, const PHom& b);
inline PHom operator*(const PHom& a, const PHom& b) { return compose(a, b); }

PHom inverse(const PHom& a);

/// Natural partial order: a is a restriction of b.
bool natural_leq(const PHom& a, const PHom& b);

/// The semilattice isomorphism onto (finite sets, union): e -> excluded(e).
/// Throws NotIdempotent.
CofinSet to_semilattice(const PHom& e);
PHom from_semilattice(const CofinSet& gaps);

}  // namespace cofin
