#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "geochroma/exactgeom.hpp"

using namespace geochroma;

namespace {

// Segment intersection by solving the 2x2 system for the two parameters;
// crossing iff both lie strictly inside (0, 1). Independent of orient().
bool crossing_by_parameters(Point a, Point b, Point c, Point d) {
  const long double rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
  const long double den = rx * sy - ry * sx;
  if (den == 0) return false;
  const long double qx = c.x - a.x, qy = c.y - a.y;
  const long double t = (qx * sy - qy * sx) / den;
  const long double u = (qx * ry - qy * rx) / den;
  return t > 0 && t < 1 && u > 0 && u < 1;
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Configuration parabola(int n) {
  std::vector<Point> pts;
  for (int t = 0; t < n; ++t) pts.push_back({t, static_cast<Coord>(t) * t});
  return Configuration::from_points(pts);
}

}  // namespace

TEST_CASE("orient examples") {
  CHECK(orient(Point{0, 0}, Point{1, 0}, Point{2, 0}) == 0);
  CHECK(orient(Point{0, 0}, Point{1, 0}, Point{0, 1}) == 1);
  CHECK(orient(Point{0, 0}, Point{0, 1}, Point{1, 0}) == -1);
}

TEST_CASE("orient is antisymmetric") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Coord> coord(-kCoordinateLimit, kCoordinateLimit);
  for (int i = 0; i < 2000; ++i) {
    const Point p{coord(rng), coord(rng)}, q{coord(rng), coord(rng)}, r{coord(rng), coord(rng)};
    const int s = orient(p, q, r);
    CHECK(orient(q, p, r) == -s);
    CHECK(orient(p, r, q) == -s);
    CHECK(orient(r, q, p) == -s);
    CHECK(orient(q, r, p) == s);
  }
}

TEST_CASE("orient at the coordinate limit") {
  const Coord L = kCoordinateLimit;
  CHECK(orient(Point{-L, -L}, Point{L, L}, Point{L - 1, L}) == 1);
  CHECK(orient(Point{-L, -L}, Point{L, L}, Point{L, L - 1}) == -1);
  CHECK(orient(Point{-L, -L}, Point{0, 0}, Point{L, L}) == 0);
}

TEST_CASE("proper_cross examples") {
  CHECK(proper_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(proper_cross({0, 0}, {2, 0}, {0, 2}, {2, 2}));
  CHECK_FALSE(proper_cross({0, 0}, {2, 0}, {2, 0}, {2, 2}));
}

TEST_CASE("proper_cross agrees with parameter solving, is symmetric and shear invariant") {
  const auto config = generate_general_position(24, 1000, 5);
  const int n = config.size();
  int crossings = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          if (c == a || c == b || d == a || d == b) continue;
          const Point pa = config.point(a), pb = config.point(b), pc = config.point(c), pd = config.point(d);
          const bool x = proper_cross(pa, pb, pc, pd);
          CHECK(x == crossing_by_parameters(pa, pb, pc, pd));
          CHECK(x == proper_cross(pc, pd, pa, pb));
          CHECK(x == proper_cross(pb, pa, pd, pc));
          // Shear (x, y) -> (x + 3y, y), determinant 1.
          auto shear = [](Point p) { return Point{p.x + 3 * p.y, p.y}; };
          CHECK(x == proper_cross(shear(pa), shear(pb), shear(pc), shear(pd)));
          crossings += x;
        }
      }
    }
  }
  CHECK(crossings > 0);
}

TEST_CASE("convex_cross examples") {
  CHECK(convex_cross(6, {0, 3}, {1, 4}));
  CHECK_FALSE(convex_cross(6, {0, 1}, {2, 5}));
  CHECK_FALSE(convex_cross(6, {0, 3}, {3, 5}));
}

TEST_CASE("convex_cross matches the parabola embedding for n <= 10") {
  for (int n = 4; n <= 10; ++n) {
    const auto par = parabola(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          for (int d = c + 1; d < n; ++d) {
            if (c == a || c == b || d == a || d == b) continue;
            CHECK(convex_cross(n, {a, b}, {c, d}) ==
                  proper_cross(par.point(a), par.point(b), par.point(c), par.point(d)));
          }
        }
      }
    }
  }
}

TEST_CASE("parts_conflict examples and symmetry") {
  const auto hex = convex_configuration(6);
  const std::vector<int> even{0, 2, 4}, odd{1, 3, 5}, low{0, 1, 2}, high{3, 4, 5}, shared{2, 3};
  CHECK(parts_conflict(hex, even, odd));
  CHECK_FALSE(parts_conflict(hex, low, high));
  CHECK(parts_conflict(hex, low, shared));
  CHECK(parts_conflict(hex, shared, high));

  const auto config = generate_general_position(12, 200, 3);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    std::vector<int> a{static_cast<int>(rng() % 12)}, b{static_cast<int>(rng() % 12)};
    while (a.size() < 3) {
      const int v = static_cast<int>(rng() % 12);
      if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
    }
    while (b.size() < 2) {
      const int v = static_cast<int>(rng() % 12);
      if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(parts_conflict(config, a, b) == parts_conflict(config, b, a));
  }
}

TEST_CASE("generate_general_position") {
  CHECK(generate_general_position(1, 10, 1).size() == 1);
  const auto three = generate_general_position(3, 10, 9);
  CHECK(orient(three.point(0), three.point(1), three.point(2)) != 0);

  const auto c = generate_general_position(50, kCoordinateLimit, 7);
  REQUIRE(c.size() == 50);
  int zero = 0;
  for (int i = 0; i < 50; ++i) {
    for (int j = i + 1; j < 50; ++j) {
      CHECK(c.point(i) != c.point(j));
      for (int k = j + 1; k < 50; ++k) zero += orient(c.point(i), c.point(j), c.point(k)) == 0;
    }
  }
  CHECK(zero == 0);
  CHECK(generate_general_position(50, kCoordinateLimit, 7) == c);
  CHECK_THROWS(generate_general_position(30, 2, 1));
}

TEST_CASE("from_points rejects bad input") {
  CHECK_THROWS_AS(Configuration::from_points({{0, 0}, {1, 1}, {2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Configuration::from_points({{0, 0}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Configuration::from_points({{0, 0}, {kCoordinateLimit + 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(convex_configuration(2), std::invalid_argument);
}

TEST_CASE("crossing pairs of convex configurations") {
  CHECK(crossing_pair_count(convex_configuration(3)) == 0);
  CHECK(crossing_pair_count(convex_configuration(4)) == 1);
  CHECK(convex_cross(4, {0, 2}, {1, 3}));
  for (int n = 3; n <= 12; ++n) CHECK(crossing_pair_count(convex_configuration(n)) == binom(n, 4));
  CHECK(crossing_pair_count(parabola(9)) == binom(9, 4));
}
