#include "cofin/cofin_set.hpp"

#include <algorithm>
#include <iterator>

#include "cofin/errors.hpp"

namespace cofin {

CofinSet::CofinSet(std::vector<Rat> points) : points_(std::move(points)) {
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i - 1] < points_[i])) {
      throw DuplicatePoint("point set must be strictly increasing: " +
                           points_[i - 1].str() + " then " + points_[i].str());
    }
  }
}

CofinSet CofinSet::from_unsorted(std::vector<Rat> points) {
  std::sort(points.begin(), points.end());
  return CofinSet(std::move(points));
}

bool CofinSet::contains(const Rat& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

bool CofinSet::includes(const CofinSet& other) const {
  return std::includes(points_.begin(), points_.end(), other.points_.begin(),
                       other.points_.end());
}

CofinSet CofinSet::with(const Rat& x) const {
  CofinSet out;
  out.points_ = points_;
  auto it = std::lower_bound(out.points_.begin(), out.points_.end(), x);
  if (it == out.points_.end() || *it != x) {
    out.points_.insert(it, x);
  }
  return out;
}

CofinSet CofinSet::without(const Rat& x) const {
  CofinSet out;
  out.points_ = points_;
  auto it = std::lower_bound(out.points_.begin(), out.points_.end(), x);
  if (it != out.points_.end() && *it == x) {
    out.points_.erase(it);
  }
  return out;
}

CofinSet unite(const CofinSet& a, const CofinSet& b) {
  std::vector<Rat> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return CofinSet(std::move(out));
}

CofinSet difference(const CofinSet& a, const CofinSet& b) {
  std::vector<Rat> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return CofinSet(std::move(out));
}

}  // namespace cofin
