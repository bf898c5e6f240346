#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "geochroma/chroma.hpp"
#include "geochroma/constructions.hpp"

using namespace geochroma;

namespace {

// Edge multiplicities counted from scratch.
bool exact_cover_oracle(const Decomposition& d) {
  const int n = d.config.size();
  std::vector<int> count(static_cast<std::size_t>(n * n), 0);
  for (const auto& p : d.parts) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
        ++count[static_cast<std::size_t>(std::min(p.vertices[i], p.vertices[j]) * n + std::max(p.vertices[i], p.vertices[j]))];
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (count[static_cast<std::size_t>(u * n + v)] != 1) return false;
    }
  }
  return true;
}

int shared(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (int x : a) s += static_cast<int>(std::count(b.begin(), b.end(), x));
  return s;
}

// Conflict from scratch: a shared vertex, or interleaving (convex) or a
// strict sign change on both segments (coordinates).
bool conflict_oracle(const Configuration& c, const std::vector<int>& a, const std::vector<int>& b) {
  if (shared(a, b) > 0) return true;
  auto between = [](int lo, int hi, int x) { return lo < x && x < hi; };
  auto side = [](Point p, Point q, Point r) {
    const __int128 v = static_cast<__int128>(q.x - p.x) * (r.y - p.y) - static_cast<__int128>(q.y - p.y) * (r.x - p.x);
    return (v > 0) - (v < 0);
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        for (std::size_t l = k + 1; l < b.size(); ++l) {
          if (c.is_convex()) {
            const int lo = std::min(a[i], a[j]), hi = std::max(a[i], a[j]);
            if (between(lo, hi, b[k]) != between(lo, hi, b[l])) return true;
          } else {
            const Point p = c.point(a[i]), q = c.point(a[j]), r = c.point(b[k]), s = c.point(b[l]);
            if (side(p, q, r) * side(p, q, s) < 0 && side(r, s, p) * side(r, s, q) < 0) return true;
          }
        }
      }
    }
  }
  return false;
}

bool coloring_oracle(const Decomposition& d) {
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    for (std::size_t j = i + 1; j < d.parts.size(); ++j) {
      if (d.coloring->colors[i] == d.coloring->colors[j] &&
          conflict_oracle(d.config, d.parts[i].vertices, d.parts[j].vertices)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("validate_decomposition") {
  for (int n : {2, 4, 7}) {
    const auto d = trivial_edge_decomposition(n >= 3 ? convex_configuration(n) : generate_general_position(n, 10, 1));
    CHECK(static_cast<int>(d.parts.size()) == n * (n - 1) / 2);
    CHECK(validate_decomposition(d).valid());
  }
  auto d = trivial_edge_decomposition(convex_configuration(5));
  d.parts.push_back({{0, 1, 2}, "triangle"});
  CHECK(validate_decomposition(d).repeated.size() == 3);
  d.parts.pop_back();
  d.parts.pop_back();
  CHECK(validate_decomposition(d).uncovered.size() == 1);
  d.parts.push_back({{3, 3}, "bad"});
  CHECK(validate_decomposition(d).malformed.size() == 1);
}

TEST_CASE("canonicalize sorts parts and carries colors") {
  Decomposition d;
  d.config = convex_configuration(4);
  d.parts = {{{2, 3}, "a"}, {{0, 1, 2}, "b"}, {{0, 3}, "c"}, {{1, 3}, "d"}};
  d.coloring = make_coloring({5, 6, 7, 8});
  d.distinguished = {1};
  const auto old = canonicalize(d);
  CHECK(old == std::vector<int>{1, 2, 3, 0});
  CHECK(d.parts[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(d.coloring->colors == std::vector<int>{6, 7, 8, 5});
  CHECK(d.distinguished == std::vector<int>{0});
}

TEST_CASE("thm4") {
  for (int n : {9, 12, 15, 18}) {
    const auto d = thm4_construction(n);
    CHECK(exact_cover_oracle(d));
    CHECK(validate_decomposition(d).valid());
    const int t = n / 3;
    REQUIRE(static_cast<int>(d.distinguished.size()) == t * t);
    for (std::size_t i = 0; i < d.distinguished.size(); ++i) {
      const auto& a = d.parts[static_cast<std::size_t>(d.distinguished[i])].vertices;
      CHECK(a.size() == 3);
      for (std::size_t j = i + 1; j < d.distinguished.size(); ++j) {
        const auto& b = d.parts[static_cast<std::size_t>(d.distinguished[j])].vertices;
        CHECK(shared(a, b) <= 1);
        CHECK(conflict_oracle(d.config, a, b));
      }
    }
    CHECK(d.metadata["distinguished"] == t * t);
  }
  CHECK_THROWS(thm4_construction(10));
}

TEST_CASE("thm3") {
  CHECK(thm3_order_for(27) == 3);
  CHECK(thm3_order_for(26) == 0);
  CHECK(thm3_order_for(41) == 5);
  CHECK(thm3_order_for(100) == 13);
  for (int q : {3, 4, 5}) {
    for (std::uint64_t seed : {1, 2, 3}) {
      const auto config = thm3_configuration(q, seed);
      CHECK(config.size() == 7 * q + 6);
      const auto r = thm3_construction(q, config);
      const auto& d = r.decomposition;
      CHECK(exact_cover_oracle(d));
      REQUIRE(static_cast<int>(d.distinguished.size()) == 2 * q * q);
      REQUIRE(r.apex.size() == d.distinguished.size());
      const double cx = static_cast<double>(r.center.x) / static_cast<double>(r.center.w);
      const double cy = static_cast<double>(r.center.y) / static_cast<double>(r.center.w);
      for (std::size_t i = 0; i < d.distinguished.size(); ++i) {
        const auto& a = d.parts[static_cast<std::size_t>(d.distinguished[i])].vertices;
        CHECK(a.size() == 4);
        CHECK(std::count(r.s1.begin(), r.s1.end(), r.apex[i]) == 1);
        std::vector<Point> tri;
        for (int v : a) {
          if (v != r.apex[i]) tri.push_back(config.point(v));
        }
        REQUIRE(tri.size() == 3);
        CHECK(in_open_triangle(r.center, tri[0], tri[1], tri[2]));
        // Same test in floating point, signs of the three edge functions.
        auto f = [&](Point p, Point q) { return (q.x - p.x) * (cy - p.y) - (q.y - p.y) * (cx - p.x); };
        const double s0 = f(tri[0], tri[1]), s1 = f(tri[1], tri[2]), s2 = f(tri[2], tri[0]);
        CHECK(((s0 > 0 && s1 > 0 && s2 > 0) || (s0 < 0 && s1 < 0 && s2 < 0)));
        for (std::size_t j = i + 1; j < d.distinguished.size(); ++j) {
          const auto& b = d.parts[static_cast<std::size_t>(d.distinguished[j])].vertices;
          CHECK(shared(a, b) <= 1);
          CHECK(conflict_oracle(config, a, b));
        }
      }
      const auto g = conflict_graph(d);
      CHECK(clique_index(g, 1'000'000, d.distinguished).clique.size() >= static_cast<std::size_t>(2 * q * q));
    }
  }
  // More points than 7q + 6: the extras are spilled.
  const auto big = generate_general_position(40, kDefaultBound, 9);
  const auto r = thm3_construction(4, big);
  CHECK(exact_cover_oracle(r.decomposition));
  CHECK(r.decomposition.distinguished.size() == 32);
  CHECK_THROWS(thm3_construction(3, generate_general_position(20, kDefaultBound, 1)));
  CHECK_THROWS(thm3_construction(3, convex_configuration(27)));
  CHECK_THROWS(thm3_construction(6, generate_general_position(48, kDefaultBound, 1)));
}

TEST_CASE("thm5") {
  for (int n : {50, 90, 130}) {
    const auto config = generate_general_position(n, kDefaultBound, 2);
    const auto r = thm5_construction(config);
    const auto& d = r.decomposition;
    CHECK(exact_cover_oracle(d));
    REQUIRE(d.coloring.has_value());
    CHECK(coloring_oracle(d));
    int triangles = 0, singles = 0;
    for (const auto& p : d.parts) (p.vertices.size() == 3 ? triangles : singles) += 1;
    CHECK(triangles == r.stats.triangles);
    CHECK(singles == r.stats.non_triangle_edges);
    CHECK(3 * triangles + singles == n * (n - 1) / 2);
    if (n < kThm5Threshold) CHECK(triangles == 0);
    if (n >= kThm5Threshold) CHECK(r.stats.k9_count > 0);
    CHECK(thm5_construction(config).decomposition == d);
  }
  // Same-colored within-strip triangles of one K9 sit in separated strips.
  const auto config = generate_general_position(100, kDefaultBound, 1);
  const auto r = thm5_construction(config);
  CHECK(r.stats.orders == std::vector<int>{11});
  CHECK(r.stats.k9_count == 121);
  CHECK(r.stats.triangles == 121 * 12 - r.stats.discarded_triangles);
  CHECK_THROWS(thm5_construction(convex_configuration(100)));
}

TEST_CASE("thm32") {
  const auto d = thm32_construction(4);
  CHECK(d.parts.size() == 876);
  CHECK(exact_cover_oracle(d));
  REQUIRE(d.coloring.has_value());
  CHECK(d.coloring->palette == 73 * 3);
  CHECK(coloring_oracle(d));
  CHECK(verify_coloring(d, *d.coloring).empty());
  const auto cls = color_class(d, 0);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    for (std::size_t j = i + 1; j < cls.size(); ++j) {
      CHECK_FALSE(conflict_oracle(d.config, d.parts[static_cast<std::size_t>(cls[i])].vertices,
                                  d.parts[static_cast<std::size_t>(cls[j])].vertices));
    }
  }
  // Every class of the k = 4 coloring has 876 / 219 = 4 triangles.
  for (int c = 0; c < 219; ++c) CHECK(color_class(d, c).size() == 4);

  const auto d8 = thm32_construction(8);
  CHECK(d8.coloring->palette == 145 * 5);
  CHECK(color_class(d8, 0).size() == 6);
  CHECK(verify_coloring(d8, *d8.coloring).empty());

  const auto d6 = thm32_construction(6);
  CHECK(d6.coloring->palette == 109 * 4);
  CHECK(exact_cover_oracle(d6));
  for (int c = 0; c < d6.coloring->palette; c += 7) {
    const auto k = color_class(d6, c);
    for (std::size_t i = 0; i < k.size(); ++i) {
      for (std::size_t j = i + 1; j < k.size(); ++j) {
        CHECK_FALSE(conflict_oracle(d6.config, d6.parts[static_cast<std::size_t>(k[i])].vertices,
                                    d6.parts[static_cast<std::size_t>(k[j])].vertices));
      }
    }
  }
  const auto layout = thm32_layout(4);
  CHECK(layout.box_triples.size() == 3);
  CHECK(layout.box_offsets.size() == 3);
}
