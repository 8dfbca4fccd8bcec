#pragma once

#include <cstddef>
#include <vector>

#include "cofin/rat.hpp"

namespace cofin {

/// A finite set of rationals stored strictly ascending. Under union it is the
/// free semilattice with unit (the empty set) and stands for the complement
/// of a co-finite domain.
class CofinSet {
 public:
  CofinSet() = default;

  /// Throws DuplicatePoint unless `points` is strictly increasing.
  explicit CofinSet(std::vector<Rat> points);
  CofinSet(std::initializer_list<Rat> points)
      : CofinSet(std::vector<Rat>(points)) {}

  /// Sorts first; still throws DuplicatePoint on repeated values.
  static CofinSet from_unsorted(std::vector<Rat> points);

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Rat>& points() const noexcept { return points_; }
  const Rat& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  bool contains(const Rat& x) const;
  /// True if every point of `other` is in this set.
  bool includes(const CofinSet& other) const;

  CofinSet with(const Rat& x) const;
  CofinSet without(const Rat& x) const;

  friend bool operator==(const CofinSet&, const CofinSet&) = default;

 private:
  std::vector<Rat> points_;
};

CofinSet unite(const CofinSet& a, const CofinSet& b);
CofinSet difference(const CofinSet& a, const CofinSet& b);

}  // namespace cofin
