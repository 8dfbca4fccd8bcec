#include "cofin/pl_homeo.hpp"

#include <algorithm>
#include <iterator>

#include "cofin/errors.hpp"

namespace cofin {

namespace {

void require_positive(const Rat& slope) {
  if (slope.sign() <= 0) {
    throw MonotonicityViolation("slope must be positive, got " + slope.str());
  }
}

Rat segment_slope(const Knot& a, const Knot& b) {
  return (b.y - a.y) / (b.x - a.x);
}

}  // namespace

PLHomeo PLHomeo::affine(Rat slope, Rat intercept) {
  require_positive(slope);
  PLHomeo f;
  f.left_slope_ = slope;
  f.right_slope_ = std::move(slope);
  f.intercept_ = std::move(intercept);
  return f;
}

PLHomeo PLHomeo::from_knots(Rat left_slope, std::vector<Knot> knots,
                            Rat right_slope) {
  if (knots.empty()) {
    throw EmptyInput("piecewise-linear map needs at least one knot");
  }
  require_positive(left_slope);
  require_positive(right_slope);
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (!(knots[i - 1].x < knots[i].x) || !(knots[i - 1].y < knots[i].y)) {
      throw MonotonicityViolation(
          "knot coordinates must be strictly increasing");
    }
  }

  std::vector<Knot> kept;
  kept.reserve(knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i) {
    Rat in = i == 0 ? left_slope : segment_slope(knots[i - 1], knots[i]);
    Rat out = i + 1 == knots.size() ? right_slope
                                    : segment_slope(knots[i], knots[i + 1]);
    if (in != out) {
      kept.push_back(knots[i]);
    }
  }

  if (kept.empty()) {
    // all pieces collinear, so left_slope == right_slope
    Rat intercept = knots.front().y - left_slope * knots.front().x;
    return affine(std::move(left_slope), std::move(intercept));
  }
  PLHomeo f;
  f.knots_ = std::move(kept);
  f.left_slope_ = std::move(left_slope);
  f.right_slope_ = std::move(right_slope);
  f.intercept_ = Rat(0);
  return f;
}

bool PLHomeo::is_identity() const {
  return knots_.empty() && left_slope_ == Rat(1) && intercept_.sign() == 0;
}

Rat PLHomeo::operator()(const Rat& x) const {
  if (knots_.empty()) {
    return left_slope_ * x + intercept_;
  }
  const Knot& first = knots_.front();
  const Knot& last = knots_.back();
  if (x <= first.x) {
    return first.y + left_slope_ * (x - first.x);
  }
  if (x >= last.x) {
    return last.y + right_slope_ * (x - last.x);
  }
  auto hi = std::upper_bound(knots_.begin(), knots_.end(), x,
                             [](const Rat& v, const Knot& k) { return v < k.x; });
  const Knot& b = *hi;
  const Knot& a = *std::prev(hi);
  return a.y + segment_slope(a, b) * (x - a.x);
}

Rat PLHomeo::preimage(const Rat& y) const {
  if (knots_.empty()) {
    return (y - intercept_) / left_slope_;
  }
  const Knot& first = knots_.front();
  const Knot& last = knots_.back();
  if (y <= first.y) {
    return first.x + (y - first.y) / left_slope_;
  }
  if (y >= last.y) {
    return last.x + (y - last.y) / right_slope_;
  }
  auto hi = std::upper_bound(knots_.begin(), knots_.end(), y,
                             [](const Rat& v, const Knot& k) { return v < k.y; });
  const Knot& b = *hi;
  const Knot& a = *std::prev(hi);
  return a.x + (y - a.y) / segment_slope(a, b);
}

Rat eval(const PLHomeo& f, const Rat& x) { return f(x); }

PLHomeo compose(const PLHomeo& f, const PLHomeo& g) {
  if (f.is_affine() && g.is_affine()) {
    return PLHomeo::affine(f.left_slope() * g.left_slope(), g(f.intercept()));
  }

  std::vector<Rat> from_f;
  from_f.reserve(f.knots().size());
  for (const Knot& k : f.knots()) {
    from_f.push_back(k.x);
  }
  std::vector<Rat> from_g;
  from_g.reserve(g.knots().size());
  for (const Knot& k : g.knots()) {
    from_g.push_back(f.preimage(k.x));
  }
  std::vector<Rat> xs;
  xs.reserve(from_f.size() + from_g.size());
  std::set_union(from_f.begin(), from_f.end(), from_g.begin(), from_g.end(),
                 std::back_inserter(xs));

  std::vector<Knot> knots;
  knots.reserve(xs.size());
  for (Rat& x : xs) {
    Rat y = g(f(x));
    knots.push_back({std::move(x), std::move(y)});
  }
  return PLHomeo::from_knots(f.left_slope() * g.left_slope(), std::move(knots),
                             f.right_slope() * g.right_slope());
}

PLHomeo inverse(const PLHomeo& f) {
  if (f.is_affine()) {
    Rat s = Rat(1) / f.left_slope();
    return PLHomeo::affine(s, -f.intercept() * s);
  }
  std::vector<Knot> knots;
  knots.reserve(f.knots().size());
  for (const Knot& k : f.knots()) {
    knots.push_back({k.y, k.x});
  }
  return PLHomeo::from_knots(Rat(1) / f.left_slope(), std::move(knots),
                             Rat(1) / f.right_slope());
}

PLHomeo order_isomorphism(const CofinSet& from, const CofinSet& to) {
  if (from.size() != to.size()) {
    throw SizeMismatch("order isomorphism needs equal sizes, got " +
                       std::to_string(from.size()) + " and " +
                       std::to_string(to.size()));
  }
  if (from.empty()) {
    throw EmptyInput("order isomorphism of empty sets");
  }
  std::vector<Knot> knots;
  knots.reserve(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    knots.push_back({from[i], to[i]});
  }
  return PLHomeo::from_knots(Rat(1), std::move(knots), Rat(1));
}

PLHomeo splice(const PLHomeo& g, const std::optional<Rat>& lo,
               const std::optional<Rat>& hi) {
  if (lo && g(*lo) != *lo) {
    throw EndpointNotFixed("splice endpoint " + lo->str() + " is not fixed");
  }
  if (hi && g(*hi) != *hi) {
    throw EndpointNotFixed("splice endpoint " + hi->str() + " is not fixed");
  }
  if (lo && hi && !(*lo < *hi)) {
    throw EmptyInput("splice interval is empty");
  }
  if (!lo && !hi) {
    return g;
  }

  std::vector<Knot> knots;
  if (lo) {
    knots.push_back({*lo, *lo});
  }
  for (const Knot& k : g.knots()) {
    if ((!lo || *lo < k.x) && (!hi || k.x < *hi)) {
      knots.push_back(k);
    }
  }
  if (hi) {
    knots.push_back({*hi, *hi});
  }
  Rat left = lo ? Rat(1) : g.left_slope();
  Rat right = hi ? Rat(1) : g.right_slope();
  return PLHomeo::from_knots(std::move(left), std::move(knots),
                             std::move(right));
}

CofinSet image(const CofinSet& s, const PLHomeo& f) {
  std::vector<Rat> out;
  out.reserve(s.size());
  for (const Rat& x : s) {
    out.push_back(f(x));
  }
  return CofinSet(std::move(out));
}

CofinSet preimage(const CofinSet& s, const PLHomeo& f) {
  std::vector<Rat> out;
  out.reserve(s.size());
  for (const Rat& y : s) {
    out.push_back(f.preimage(y));
  }
  return CofinSet(std::move(out));
}

}  // namespace cofin
