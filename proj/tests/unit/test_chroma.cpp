#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "geochroma/chroma.hpp"
#include "geochroma/constructions.hpp"

using namespace geochroma;

namespace {

ConflictGraph complete_graph(int m) {
  ConflictGraph g(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
  }
  g.finalize();
  return g;
}

// Plain maximum clique by subset enumeration (m <= 20).
int max_clique_oracle(const ConflictGraph& g) {
  const int m = g.size();
  int best = m > 0 ? 1 : 0;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = i + 1; j < m && ok; ++j) ok = !(mask >> j & 1) || g.adjacent(i, j);
    }
    if (ok) best = size;
  }
  return best;
}

std::vector<std::vector<int>> all_triangles(int n) {
  std::vector<std::vector<int>> t;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) t.push_back({a, b, c});
    }
  }
  return t;
}

int shared(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (int x : a) s += static_cast<int>(std::count(b.begin(), b.end(), x));
  return s;
}

// Largest subfamily where every pair satisfies ok(i, j), by plain recursion.
int max_family_oracle(int m, const std::function<bool(int, int)>& ok) {
  std::vector<int> chosen;
  int best = 0;
  std::function<void(int)> rec = [&](int next) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int i = next; i < m; ++i) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](int c) { return ok(c, i); })) continue;
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace

TEST_CASE("conflict graph matches parts_conflict") {
  const auto d4 = trivial_edge_decomposition(convex_configuration(4));
  const auto g4 = conflict_graph(d4);
  auto index = [&](int u, int v) {
    for (std::size_t i = 0; i < d4.parts.size(); ++i) {
      if (d4.parts[i].vertices == std::vector<int>{u, v}) return static_cast<int>(i);
    }
    return -1;
  };
  CHECK(g4.adjacent(index(0, 2), index(1, 3)));
  CHECK_FALSE(g4.adjacent(index(0, 1), index(2, 3)));

  for (const auto& d : {thm4_construction(12), thm5_construction(generate_general_position(40, 4096, 3)).decomposition}) {
    const auto g = conflict_graph(d);
    std::int64_t edges = 0;
    for (int i = 0; i < g.size(); ++i) {
      CHECK_FALSE(g.adjacent(i, i));
      for (int j = i + 1; j < g.size(); ++j) {
        const bool c = parts_conflict(d.config, d.parts[static_cast<std::size_t>(i)].vertices, d.parts[static_cast<std::size_t>(j)].vertices);
        CHECK(g.adjacent(i, j) == c);
        CHECK(g.adjacent(j, i) == c);
        edges += c;
        if (shared(d.parts[static_cast<std::size_t>(i)].vertices, d.parts[static_cast<std::size_t>(j)].vertices) > 0) CHECK(c);
      }
    }
    CHECK(g.edge_count() == edges);
  }
}

TEST_CASE("verify_coloring") {
  const auto d = trivial_edge_decomposition(convex_configuration(5));
  std::vector<int> one(d.parts.size(), 0), distinct(d.parts.size());
  for (std::size_t i = 0; i < distinct.size(); ++i) distinct[i] = static_cast<int>(i);
  CHECK_FALSE(verify_coloring(d, make_coloring(one)).empty());
  CHECK(verify_coloring(d, make_coloring(distinct)).empty());
  CHECK(make_coloring({3, 3, 9}).palette == 2);
}

TEST_CASE("greedy, clique and exact on small graphs") {
  CHECK(greedy_color(ConflictGraph(5)).palette == 1);
  CHECK(greedy_color(complete_graph(6)).palette == 6);
  CHECK(clique_index(ConflictGraph(4)).clique.size() == 1);
  CHECK(exact_chromatic_index(ConflictGraph(1)).upper == 1);
  CHECK(exact_chromatic_index(ConflictGraph(1)).exact);

  const auto e6 = conflict_graph(trivial_edge_decomposition(convex_configuration(6)));
  CHECK(greedy_color(e6).palette >= 6);
  const auto e5 = exact_chromatic_index(conflict_graph(trivial_edge_decomposition(convex_configuration(5))));
  CHECK(e5.exact);
  CHECK(e5.lower >= 5);
  CHECK(clique_index(conflict_graph(trivial_edge_decomposition(convex_configuration(5)))).clique.size() >= 5);

  const auto d9 = thm4_construction(9);
  const auto g9 = conflict_graph(d9);
  CHECK(clique_index(g9).clique.size() >= 9);
  CHECK(exact_chromatic_index(g9, 1'000'000, d9.distinguished).lower >= 9);

  // Odd cycle: clique 2, chromatic 3.
  ConflictGraph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  c5.finalize();
  CHECK(clique_index(c5).clique.size() == 2);
  CHECK(exact_chromatic_index(c5).upper == 3);
  CHECK(brute_force_chromatic_index(c5) == 3);
}

TEST_CASE("random graphs: clique <= exact <= greedy, exact == brute force, clique == oracle") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 150; ++it) {
    const int m = 1 + static_cast<int>(rng() % 14);
    ConflictGraph g(m);
    const int density = static_cast<int>(rng() % 100);
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (static_cast<int>(rng() % 100) < density) g.add_edge(i, j);
      }
    }
    g.finalize();
    const auto clique = clique_index(g);
    const auto chi = exact_chromatic_index(g);
    const auto greedy = greedy_color(g);
    CHECK(clique.exact);
    CHECK(static_cast<int>(clique.clique.size()) == max_clique_oracle(g));
    CHECK(chi.exact);
    CHECK(static_cast<int>(clique.clique.size()) <= chi.upper);
    CHECK(chi.upper <= greedy.palette);
    CHECK(chi.upper == brute_force_chromatic_index(g));
    CHECK(verify_coloring(g, greedy).empty());
    CHECK(verify_coloring(g, chi.best).empty());
    CHECK(chi.best.palette == chi.upper);
  }
}

TEST_CASE("budget-limited searches keep sound bounds") {
  const auto g = conflict_graph(trivial_edge_decomposition(convex_configuration(9)));
  const auto chi = exact_chromatic_index(g, 10);
  const auto full = exact_chromatic_index(g);
  REQUIRE(full.exact);
  CHECK(chi.lower <= full.upper);
  CHECK(full.upper <= chi.upper);
  CHECK(verify_coloring(g, chi.best).empty());
  const auto cl = clique_index(g, 3);
  CHECK(cl.clique.size() >= 1);
  for (std::size_t i = 0; i < cl.clique.size(); ++i) {
    for (std::size_t j = i + 1; j < cl.clique.size(); ++j) CHECK(g.adjacent(cl.clique[i], cl.clique[j]));
  }
}

TEST_CASE("triangle length and census") {
  for (int n = 3; n <= 13; ++n) {
    for (const auto& t : all_triangles(n)) {
      int brute = n;
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          const int gap = std::abs(t[i] - t[j]);
          brute = std::min(brute, std::min(gap, n - gap));
        }
      }
      CHECK(triangle_length(n, t) == brute);
      CHECK(triangle_length(n, t) <= n / 3);
    }
  }
  const auto x = census_threshold();
  CHECK(x.floor() == 10);
  Decomposition one;
  one.config = convex_configuration(30);
  one.parts = {{{0, 10, 20}, "triangle"}};
  add_singleton_edges(one);
  std::vector<int> colors(one.parts.size());
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<int>(i);
  auto c = triangle_census(one, make_coloring(colors), x);
  // Length 10, and 10 * x >= 30.
  CHECK(c.max_class_large == 1);
  CHECK(c.class_limit == 8);
  one.parts[0].vertices = {0, 1, 15};
  c = triangle_census(one, make_coloring(colors), x);
  CHECK(c.max_class_large == 0);
  one.parts.push_back({{0, 1, 2, 3}, "quad"});
  colors.push_back(0);
  CHECK_THROWS_AS(triangle_census(one, make_coloring(colors), x), std::invalid_argument);

  // Equality counts as large: length 3 on n = 10 at x = 10/3.
  Decomposition eq;
  eq.config = convex_configuration(10);
  eq.parts = {{{0, 3, 6}, "triangle"}};
  add_singleton_edges(eq);
  std::vector<int> ec(eq.parts.size(), 0);
  for (std::size_t i = 0; i < ec.size(); ++i) ec[i] = static_cast<int>(i);
  CHECK(triangle_census(eq, make_coloring(ec), QuadSurd(Rational(10, 3))).max_class_large == 1);
  CHECK(triangle_census(eq, make_coloring(ec), QuadSurd(Rational(33, 10))).max_class_large == 0);

  const auto d = thm32_construction(4);
  const auto census = triangle_census(d, *d.coloring, x);
  CHECK(census.max_class_large <= 8);
  CHECK(census.violating_classes.empty());
}

TEST_CASE("bound evaluators") {
  CHECK(evaluate_bound(BoundVariant::prop1, 12) == QuadSurd(Rational(22)));
  CHECK(evaluate_bound(BoundVariant::prop2, 12) == QuadSurd(Rational(11)));
  CHECK(evaluate_bound(BoundVariant::thm4, 12) == QuadSurd(Rational(16)));
  CHECK(evaluate_bound(BoundVariant::thm3, 27) == QuadSurd(Rational(18)));
  CHECK(evaluate_bound(BoundVariant::thm32, 73) == QuadSurd(Rational(219)));
  CHECK(evaluate_bound(BoundVariant::thm5, 9) == QuadSurd(Rational(9)));
  // prop1 with c = 1 at n = 16: 40 + 64.
  CHECK(evaluate_bound(BoundVariant::prop1, 16, Rational(1)) == QuadSurd(Rational(104)));

  const double x = 2 * (3 + std::sqrt(6.0));
  const double expect = (73.0 * 72 / 2 / 3 - 73.0 * 73 / x) / (x - 2);
  CHECK(std::abs(evaluate_bound(BoundVariant::thm33, 73).to_double() - expect) < 1e-9);
  const QuadSurd denom(Rational(60), Rational(24), 6);
  CHECK(denom < QuadSurd(Rational(119)));
  CHECK(std::abs(denom.to_double() - 118.7877538267963) < 1e-9);

  for (auto v : {BoundVariant::prop1, BoundVariant::prop2, BoundVariant::thm3, BoundVariant::thm4,
                 BoundVariant::thm32, BoundVariant::thm33, BoundVariant::thm5}) {
    CHECK(bound_variant_from_string(to_string(v)) == v);
  }
  CHECK_THROWS_AS(bound_variant_from_string("nope"), std::invalid_argument);
}

TEST_CASE("max_intersecting_family") {
  CHECK(max_intersecting_family(convex_configuration(3), 3).family.size() == 1);
  const auto pent = max_intersecting_family(convex_configuration(5), 2);
  CHECK(pent.exact);
  CHECK(pent.family.size() == 5);

  for (int n : {5, 6, 7}) {
    const auto config = convex_configuration(n);
    const auto tris = all_triangles(n);
    const int oracle = max_family_oracle(static_cast<int>(tris.size()), [&](int i, int j) {
      return shared(tris[static_cast<std::size_t>(i)], tris[static_cast<std::size_t>(j)]) <= 1 &&
             parts_conflict(config, tris[static_cast<std::size_t>(i)], tris[static_cast<std::size_t>(j)]);
    });
    const auto r = max_intersecting_family(config, 3);
    CHECK(r.exact);
    CHECK(static_cast<int>(r.family.size()) == oracle);
    for (std::size_t i = 0; i < r.family.size(); ++i) {
      for (std::size_t j = i + 1; j < r.family.size(); ++j) {
        CHECK(shared(r.family[i], r.family[j]) <= 1);
        CHECK(parts_conflict(config, r.family[i], r.family[j]));
      }
    }
  }
  CHECK_THROWS(max_intersecting_family(convex_configuration(5), 4));
}

TEST_CASE("tau_point") {
  const auto tri = Configuration::from_points({{0, 0}, {10, 0}, {0, 10}});
  CHECK(tau_point(tri, {1, 1, 1}).family.size() == 1);
  CHECK(tau_point(tri, {20, 20, 1}).family.size() == 0);
  CHECK_THROWS(tau_point(tri, {0, 0, 1}));

  const auto six = generate_general_position(6, 4096, 1);
  const auto fan = six_fan(six, 1);
  const auto p = *fan.center;
  const auto tris = all_triangles(6);
  std::vector<std::vector<int>> containing;
  for (const auto& t : tris) {
    if (in_closed_triangle(p, six.point(t[0]), six.point(t[1]), six.point(t[2]))) containing.push_back(t);
  }
  const int oracle = max_family_oracle(static_cast<int>(containing.size()), [&](int i, int j) {
    return shared(containing[static_cast<std::size_t>(i)], containing[static_cast<std::size_t>(j)]) <= 1;
  });
  const auto r = tau_point(six, p);
  CHECK(r.exact);
  CHECK(static_cast<int>(r.family.size()) == oracle);
  CHECK(r.family.size() <= 4);
}
