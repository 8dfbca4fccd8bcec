#include "cofin/generate.hpp"

#include <algorithm>
#include <array>

#include "cofin/errors.hpp"

namespace cofin {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ splitmix64(stream)) + index);
}

Generator::Generator(std::uint64_t seed, GeneratorBounds bounds)
    : rng_(seed), bounds_(bounds) {}

std::size_t Generator::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

bool Generator::coin() { return uniform(0, 1) == 1; }

Rat Generator::rational() {
  long c = bounds_.coeff_bound;
  long num = std::uniform_int_distribution<long>(-c, c)(rng_);
  long den = std::uniform_int_distribution<long>(1, 4)(rng_);
  return Rat(num, den);
}

Rat Generator::slope() {
  static const std::array<Rat, 5> slopes = {Rat(1, 3), Rat(1, 2), Rat(1),
                                            Rat(2), Rat(3)};
  return slopes[uniform(0, slopes.size() - 1)];
}

CofinSet Generator::points(std::size_t n) {
  std::vector<Rat> out;
  out.reserve(n);
  std::size_t misses = 0;
  while (out.size() < n) {
    Rat r = rational();
    if (std::find(out.begin(), out.end(), r) != out.end()) {
      // small coefficient bounds run out of distinct values
      if (++misses > 64) {
        out.push_back(*std::max_element(out.begin(), out.end()) + Rat(1));
        misses = 0;
      }
      continue;
    }
    out.push_back(std::move(r));
  }
  return CofinSet::from_unsorted(std::move(out));
}

CofinSet Generator::points() { return points(uniform(0, bounds_.max_defect)); }

PLHomeo Generator::unit() {
  std::size_t m = uniform(0, bounds_.max_knots);
  if (m == 0) {
    Rat s = slope();
    return PLHomeo::affine(std::move(s), rational());
  }
  CofinSet xs = points(m);
  CofinSet ys = points(m);
  std::vector<Knot> knots;
  knots.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    knots.push_back({xs[i], ys[i]});
  }
  Rat left = slope();
  Rat right = slope();
  return PLHomeo::from_knots(std::move(left), std::move(knots),
                             std::move(right));
}

PLHomeo Generator::unit_fixing(const CofinSet& fixed) {
  if (fixed.empty()) {
    return unit();
  }
  auto fraction = [this] { return Rat(static_cast<long>(uniform(1, 4)), 5); };
  auto offset = [this] { return Rat(static_cast<long>(uniform(1, 6)), 2); };

  std::vector<Knot> knots;
  if (coin()) {
    knots.push_back({fixed[0] - offset(), fixed[0] - offset()});
  }
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    knots.push_back({fixed[i], fixed[i]});
    if (i + 1 < fixed.size() && coin()) {
      Rat width = fixed[i + 1] - fixed[i];
      knots.push_back({fixed[i] + width * fraction(), fixed[i] + width * fraction()});
    }
  }
  if (coin()) {
    knots.push_back({fixed.points().back() + offset(),
                     fixed.points().back() + offset()});
  }
  Rat left = slope();
  Rat right = slope();
  return PLHomeo::from_knots(std::move(left), std::move(knots),
                             std::move(right));
}

PHom Generator::element() {
  PLHomeo g = unit();
  return PHom(std::move(g), points());
}

PHom Generator::element_with_defect(std::size_t n) {
  PLHomeo g = unit();
  return PHom(std::move(g), points(n));
}

PHom Generator::idempotent() { return PHom::idempotent(points()); }

PHom Generator::in_h_class(const CofinSet& gaps) {
  return PHom(unit_fixing(gaps), gaps);
}

Rat truncate(const Rat& r) {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), r.value().get_num_mpz_t(),
             r.value().get_den_mpz_t());
  return Rat(q, mpz_class(1));
}

namespace {

template <typename T, typename F>
void try_push(std::vector<T>& out, F&& make) {
  try {
    out.push_back(make());
  } catch (const Error&) {
    // candidate broke an invariant; skip it
  }
}

}  // namespace

std::vector<PLHomeo> shrink_candidates(const PLHomeo& f) {
  std::vector<PLHomeo> out;
  if (f.is_identity()) {
    return out;
  }
  out.push_back(PLHomeo::identity());
  if (f.is_affine()) {
    const Rat& s = f.left_slope();
    const Rat& c = f.intercept();
    if (s != Rat(1)) out.push_back(PLHomeo::affine(Rat(1), c));
    if (c.sign() != 0) out.push_back(PLHomeo::affine(s, Rat(0)));
    if (!c.is_integer()) out.push_back(PLHomeo::affine(s, truncate(c)));
    return out;
  }

  const auto& knots = f.knots();
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (knots.size() == 1) {
      const Knot& k = knots[0];
      out.push_back(PLHomeo::affine(f.left_slope(), k.y - f.left_slope() * k.x));
      out.push_back(
          PLHomeo::affine(f.right_slope(), k.y - f.right_slope() * k.x));
      continue;
    }
    std::vector<Knot> fewer = knots;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(i));
    try_push(out, [&] {
      return PLHomeo::from_knots(f.left_slope(), fewer, f.right_slope());
    });
  }
  if (f.left_slope() != Rat(1)) {
    try_push(out, [&] { return PLHomeo::from_knots(Rat(1), knots, f.right_slope()); });
  }
  if (f.right_slope() != Rat(1)) {
    try_push(out, [&] { return PLHomeo::from_knots(f.left_slope(), knots, Rat(1)); });
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    for (int coord = 0; coord < 2; ++coord) {
      std::vector<Knot> moved = knots;
      Rat& v = coord == 0 ? moved[i].x : moved[i].y;
      if (v.is_integer()) continue;
      v = truncate(v);
      try_push(out, [&] {
        return PLHomeo::from_knots(f.left_slope(), moved, f.right_slope());
      });
    }
  }
  return out;
}

std::vector<PHom> shrink_candidates(const PHom& a) {
  std::vector<PHom> out;
  const CofinSet& gaps = a.excluded();
  for (const Rat& x : gaps) {
    out.emplace_back(a.extension(), gaps.without(x));
  }
  for (PLHomeo& g : shrink_candidates(a.extension())) {
    out.emplace_back(std::move(g), gaps);
  }
  for (const Rat& x : gaps) {
    for (const Rat& target : {Rat(0), truncate(x)}) {
      if (target == x || gaps.contains(target)) continue;
      out.emplace_back(a.extension(), gaps.without(x).with(target));
    }
  }
  return out;
}

}  // namespace cofin
