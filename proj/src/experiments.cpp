#include "geochroma/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>

#include "geochroma/chroma.hpp"
#include "geochroma/constructions.hpp"
#include "geochroma/designs.hpp"
#include "geochroma/io.hpp"

namespace geochroma {

namespace {

using nlohmann::json;

// Wall-clock limits per criterion, in seconds.
constexpr double kLimitSts9 = 1;
constexpr double kLimitThm4 = 10;
constexpr double kLimitThm3 = 60 * 20;  // 60 s per seed, 20 seeds
constexpr double kLimitThm32 = 120;
constexpr double kLimitThm33 = 10;
constexpr double kLimitThm5 = 600;
constexpr double kLimitColoring = 300;
constexpr double kLimitEdges = 120;
constexpr double kLimitSearch = 300;

// Slack allowed in value * 119 <= n^2 + kThm33Slack * n.
constexpr std::int64_t kThm33Slack = 1;

constexpr std::uint64_t kThm5Seed = 1;
constexpr std::uint64_t kColoringSeed = 20240607;
constexpr int kColoringInstances = 200;

std::string fixed(double v, int digits = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

int shared_vertices(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (int x : a) s += static_cast<int>(std::count(b.begin(), b.end(), x));
  return s;
}

// Pairwise conflict and pairwise edge-disjointness of a family of parts.
struct FamilyCheck {
  std::int64_t pairs = 0;
  std::int64_t conflicting = 0;
  std::int64_t edge_sharing = 0;
};

FamilyCheck check_family(const Configuration& config, const std::vector<std::vector<int>>& family) {
  FamilyCheck c;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      ++c.pairs;
      if (parts_conflict(config, family[i], family[j])) ++c.conflicting;
      if (shared_vertices(family[i], family[j]) >= 2) ++c.edge_sharing;
    }
  }
  return c;
}

std::vector<std::vector<int>> distinguished_parts(const Decomposition& d) {
  std::vector<std::vector<int>> out;
  for (int i : d.distinguished) out.push_back(d.parts[i].vertices);
  return out;
}

SuiteReport suite_sts9() {
  SuiteReport r;
  const auto s = sts9();
  const auto report = validate_design(s.design);
  bool classes_ok = true;
  for (const auto& cls : s.classes) {
    std::vector<int> seen;
    for (int b : cls) seen.insert(seen.end(), s.design.blocks[b].begin(), s.design.blocks[b].end());
    std::sort(seen.begin(), seen.end());
    classes_ok = classes_ok && seen == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8};
  }
  std::int64_t covered = 0;
  for (const auto& b : s.design.blocks) covered += static_cast<std::int64_t>(b.size() * (b.size() - 1) / 2);
  r.pass = s.design.blocks.size() == 12 && s.classes.size() == 4 && classes_ok && report.valid() && covered == 36;
  r.measured = {{"blocks", s.design.blocks.size()},
                {"classes", s.classes.size()},
                {"classes_partition_points", classes_ok},
                {"pairs_covered", covered},
                {"uncovered", report.uncovered.size()},
                {"repeated", report.repeated.size()}};
  r.summary = std::to_string(s.design.blocks.size()) + " blocks, 4 parallel classes, " + std::to_string(covered) +
              "/36 pairs once";
  return r;
}

SuiteReport suite_thm4() {
  SuiteReport r;
  r.pass = true;
  json runs = json::array();
  std::string summary;
  for (int n : {9, 12, 15}) {
    const int t = n / 3;
    const auto d = thm4_construction(n);
    const auto family = distinguished_parts(d);
    const auto fc = check_family(d.config, family);
    const auto g = conflict_graph(d);
    const auto clique = clique_index(g, 2'000'000, d.distinguished);
    const auto chi = exact_chromatic_index(g, 2'000'000, d.distinguished);
    const bool ok = static_cast<int>(family.size()) == t * t && fc.conflicting == fc.pairs && fc.edge_sharing == 0 &&
                    static_cast<int>(clique.clique.size()) >= t * t && chi.lower >= t * t &&
                    validate_decomposition(d).valid();
    r.pass = r.pass && ok;
    runs.push_back({{"n", n},
                    {"triangles", family.size()},
                    {"pairs", fc.pairs},
                    {"conflicting_pairs", fc.conflicting},
                    {"edge_sharing_pairs", fc.edge_sharing},
                    {"clique_lower_bound", clique.clique.size()},
                    {"chromatic_lower", chi.lower},
                    {"chromatic_upper", chi.upper},
                    {"chromatic_exact", chi.exact}});
    summary += "n=" + std::to_string(n) + ": " + std::to_string(family.size()) + " triangles, omega'>=" +
               std::to_string(clique.clique.size()) + ", chi' in [" + std::to_string(chi.lower) + "," +
               std::to_string(chi.upper) + "]; ";
  }
  r.measured = {{"runs", runs}};
  r.summary = summary;
  return r;
}

SuiteReport suite_thm3() {
  SuiteReport r;
  r.pass = true;
  json runs = json::array();
  std::int64_t total_pairs = 0, total_conflicting = 0;
  int successes = 0, attempts = 0;
  double worst_seed = 0;
  for (int q : {3, 4}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      ++attempts;
      const auto t0 = std::chrono::steady_clock::now();
      json run = {{"q", q}, {"seed", seed}};
      try {
        const auto config = thm3_configuration(q, seed);
        const auto res = thm3_construction(q, config);
        const auto& d = res.decomposition;
        const auto family = distinguished_parts(d);
        const auto fc = check_family(config, family);
        int inside = 0;
        for (std::size_t i = 0; i < family.size(); ++i) {
          std::vector<Point> tri;
          for (int v : family[i]) {
            if (v != res.apex[i]) tri.push_back(config.point(v));
          }
          if (tri.size() == 3 && in_open_triangle(res.center, tri[0], tri[1], tri[2])) ++inside;
        }
        const bool cover = validate_decomposition(d).valid();
        const bool ok = cover && static_cast<int>(family.size()) == 2 * q * q && fc.edge_sharing == 0 &&
                        inside == static_cast<int>(family.size()) && fc.conflicting == fc.pairs;
        total_pairs += fc.pairs;
        total_conflicting += fc.conflicting;
        if (ok) ++successes;
        r.pass = r.pass && ok;
        run["parts"] = family.size();
        run["exact_cover"] = cover;
        run["edge_sharing_pairs"] = fc.edge_sharing;
        run["center_inside"] = inside;
        run["conflict_rate"] = fc.pairs ? static_cast<double>(fc.conflicting) / static_cast<double>(fc.pairs) : 1.0;
      } catch (const std::exception& e) {
        r.pass = false;
        run["error"] = e.what();
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      worst_seed = std::max(worst_seed, secs);
      if (secs > 60) r.pass = false;
      run["seconds"] = secs;
      runs.push_back(run);
    }
  }
  const double rate = total_pairs ? static_cast<double>(total_conflicting) / static_cast<double>(total_pairs) : 0.0;
  r.measured = {{"runs", runs}, {"conflict_rate", rate}, {"worst_seed_seconds", worst_seed}};
  r.summary = std::to_string(successes) + "/" + std::to_string(attempts) + " seeded runs ok, conflict rate " +
              fixed(100 * rate, 2) + "%, center inside every X/Y triangle minus v4";
  return r;
}

SuiteReport suite_thm32() {
  SuiteReport r;
  const int k = 4;
  const auto table = difference_triples(k);
  const int n = table.n;
  const auto design = cyclic_sts(n, table);
  const auto report = validate_design(design);
  std::int64_t pairs = 0;
  for (const auto& b : design.blocks) pairs += static_cast<std::int64_t>(b.size() * (b.size() - 1) / 2);
  const auto d = thm32_construction(k);
  const auto violations = verify_coloring(d, *d.coloring);
  const auto box1 = color_class(d, 0);
  const int expected_colors = n * (k / 2 + 1);
  // Where the box-1 class first reaches six triangles.
  const auto d8 = thm32_construction(8);
  const auto box1_k8 = color_class(d8, 0);
  const bool k8_proper = verify_coloring(d8, *d8.coloring).empty();
  r.pass = report.valid() && design.blocks.size() == 876 && pairs == 2628 && d.coloring->palette == expected_colors &&
           violations.empty() && box1.size() == 6;
  r.measured = {{"n", n},
                {"blocks", design.blocks.size()},
                {"pairs_covered", pairs},
                {"design_valid", report.valid()},
                {"colors", d.coloring->palette},
                {"expected_colors", expected_colors},
                {"violations", violations.size()},
                {"box1_rotation0_class", box1.size()},
                {"k8_box1_rotation0_class", box1_k8.size()},
                {"k8_coloring_proper", k8_proper}};
  r.summary = std::to_string(design.blocks.size()) + " blocks, " + std::to_string(pairs) + " pairs once, " +
              std::to_string(d.coloring->palette) + " colors, " + std::to_string(violations.size()) +
              " violations, box-1 class " + std::to_string(box1.size()) + " triangles (expected 6; k=8 gives " +
              std::to_string(box1_k8.size()) + ")";
  return r;
}

SuiteReport suite_thm33() {
  SuiteReport r;
  const auto d = thm32_construction(4);
  const int n = d.config.size();
  const auto x = census_threshold();
  const auto census = triangle_census(d, *d.coloring, x);
  const auto value = evaluate_bound(BoundVariant::thm33, n);
  const QuadSurd lhs = value * QuadSurd(Rational(119));
  const QuadSurd rhs(Rational(static_cast<std::int64_t>(n) * n + kThm33Slack * n));
  const QuadSurd denom(Rational(60), Rational(24), 6);
  const bool denom_ok = denom < QuadSurd(Rational(119));
  const bool ok = census.class_limit == 8 && census.max_class_large <= 8 && census.violating_classes.empty() &&
                  lhs <= rhs && denom_ok;
  r.pass = ok;
  r.measured = {{"n", n},
                {"x", x.str()},
                {"class_limit", census.class_limit},
                {"max_large_in_class", census.max_class_large},
                {"bound_value", value.str()},
                {"bound_value_approx", value.to_double()},
                {"value_times_119_approx", lhs.to_double()},
                {"n_squared", n * n},
                {"slack", kThm33Slack * n},
                {"denominator", denom.str()},
                {"denominator_approx", denom.to_double()}};
  r.summary = "max large per class " + std::to_string(census.max_class_large) + " <= " +
              std::to_string(census.class_limit) + ", bound " + fixed(value.to_double()) + ", 119*bound " +
              fixed(lhs.to_double(), 1) + " <= " + std::to_string(n * n) + ", 60+24*sqrt6 = " +
              fixed(denom.to_double(), 2) + " < 119";
  return r;
}

SuiteReport suite_thm5() {
  SuiteReport r;
  const std::vector<int> sizes{100, 200, 400};
  json runs = json::array();
  std::vector<double> fraction, excess;
  bool cover_ok = true, coloring_ok = true;
  std::vector<int> palettes;
  for (int n : sizes) {
    const auto config = generate_general_position(n, kDefaultBound, kThm5Seed);
    const auto res = thm5_construction(config);
    const auto& d = res.decomposition;
    const bool cover = validate_decomposition(d).valid();
    const bool proper = verify_coloring(d, *d.coloring).empty();
    cover_ok = cover_ok && cover;
    coloring_ok = coloring_ok && proper;
    const double edges = n * (n - 1) / 2.0;
    fraction.push_back(res.stats.non_triangle_edges / edges);
    // (palette - n^2/9) / n^1.5
    excess.push_back((res.stats.colors - n * n / 9.0) / std::pow(n, 1.5));
    palettes.push_back(res.stats.colors);
    runs.push_back({{"n", n},
                    {"colors", res.stats.colors},
                    {"triangles", res.stats.triangles},
                    {"non_triangle_edges", res.stats.non_triangle_edges},
                    {"non_triangle_fraction", fraction.back()},
                    {"k9_count", res.stats.k9_count},
                    {"discarded_triangles", res.stats.discarded_triangles},
                    {"orders", res.stats.orders},
                    {"exact_cover", cover},
                    {"coloring_proper", proper}});
  }
  // C is fitted on the two smaller sizes and checked on the largest.
  const double c_fit = std::max(excess[0], excess[1]);
  const int last = sizes.back();
  const double bound_last = last * last / 9.0 + c_fit * std::pow(last, 1.5);
  const bool bound_ok = palettes.back() <= bound_last;
  bool decreasing = true;
  for (std::size_t i = 1; i < fraction.size(); ++i) decreasing = decreasing && fraction[i] < fraction[i - 1];
  r.pass = cover_ok && coloring_ok && bound_ok && decreasing;
  r.measured = {{"runs", runs},
                {"fitted_C", c_fit},
                {"C_per_n", excess},
                {"bound_at_largest", bound_last},
                {"palette_bound_holds", bound_ok},
                {"fraction_strictly_decreasing", decreasing}};
  std::string fr;
  for (std::size_t i = 0; i < sizes.size(); ++i) fr += (i ? ", " : "") + fixed(fraction[i], 4);
  r.summary = std::string("cover ") + (cover_ok ? "ok" : "FAILED") + ", coloring " + (coloring_ok ? "ok" : "FAILED") +
              ", fitted C " + fixed(c_fit, 4) + " (palette " + std::to_string(palettes.back()) + " <= " +
              fixed(bound_last, 1) + " at n=" + std::to_string(last) + "), non-triangle fraction " + fr +
              (decreasing ? " strictly decreasing" : " NOT strictly decreasing");
  return r;
}

// Random triangle packing on convex n vertices plus singleton edges.
Decomposition random_packing(std::mt19937_64& rng, int n) {
  Decomposition d;
  d.config = Configuration::convex(n);
  std::vector<std::vector<int>> triangles;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) triangles.push_back({a, b, c});
    }
  }
  for (std::size_t i = triangles.size(); i > 1; --i) std::swap(triangles[i - 1], triangles[rng() % i]);
  for (const auto& t : triangles) {
    if (rng() % 2) continue;
    bool disjoint = true;
    for (const auto& p : d.parts) disjoint = disjoint && shared_vertices(p.vertices, t) <= 1;
    if (disjoint) d.parts.push_back({t, "triangle"});
  }
  add_singleton_edges(d);
  canonicalize(d);
  return d;
}

SuiteReport suite_coloring() {
  SuiteReport r;
  std::mt19937_64 rng(kColoringSeed);
  int ok = 0, exact = 0;
  int max_parts = 0;
  json failures = json::array();
  for (int i = 0; i < kColoringInstances; ++i) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const auto d = random_packing(rng, n);
    const auto g = conflict_graph(d);
    const auto clique = clique_index(g);
    const auto chi = exact_chromatic_index(g);
    const auto greedy = greedy_color(g);
    const int brute = brute_force_chromatic_index(g);
    max_parts = std::max(max_parts, g.size());
    if (chi.exact) ++exact;
    const bool good = chi.exact && static_cast<int>(clique.clique.size()) <= chi.upper && chi.upper <= greedy.palette &&
                      chi.upper == brute && verify_coloring(g, chi.best).empty() && verify_coloring(g, greedy).empty();
    if (good) {
      ++ok;
    } else {
      failures.push_back({{"instance", i}, {"n", n}, {"clique", clique.clique.size()}, {"exact", chi.upper},
                          {"greedy", greedy.palette}, {"brute", brute}});
    }
  }
  r.pass = ok == kColoringInstances;
  r.measured = {{"instances", kColoringInstances}, {"consistent", ok}, {"exact", exact}, {"max_parts", max_parts},
                {"failures", failures}};
  r.summary = std::to_string(ok) + "/" + std::to_string(kColoringInstances) +
              " instances with clique <= exact <= greedy and exact == brute force";
  return r;
}

SuiteReport suite_edges() {
  SuiteReport r;
  r.pass = true;
  json runs = json::array();
  std::string summary;
  for (int n = 5; n <= 9; ++n) {
    const auto d = trivial_edge_decomposition(Configuration::convex(n));
    const auto g = conflict_graph(d);
    const auto chi = exact_chromatic_index(g);
    const bool ok = chi.lower >= n;
    r.pass = r.pass && ok;
    runs.push_back({{"n", n}, {"lower", chi.lower}, {"upper", chi.upper}, {"exact", chi.exact}});
    summary += "n=" + std::to_string(n) + ": " +
               (chi.exact ? std::to_string(chi.lower)
                          : "[" + std::to_string(chi.lower) + "," + std::to_string(chi.upper) + "]") +
               "; ";
  }
  r.measured = {{"runs", runs}};
  r.summary = "chromatic index of the edge decomposition " + summary;
  return r;
}

SuiteReport suite_search() {
  SuiteReport r;
  const auto hex = Configuration::convex(6);
  const auto tri = max_intersecting_family(hex, 3);
  const auto tri_check = check_family(hex, tri.family);
  const auto pent = Configuration::convex(5);
  const auto edges = max_intersecting_family(pent, 2);
  const auto edge_check = check_family(pent, edges.family);
  const bool tri_ok = tri.exact && tri_check.conflicting == tri_check.pairs && tri_check.edge_sharing == 0;
  const bool edge_ok = edges.exact && edge_check.conflicting == edge_check.pairs && edge_check.edge_sharing == 0;
  r.pass = tri_ok && edge_ok;
  const int conj = 6 / 3 * (6 / 3) + 1;
  r.measured = {{"triangles_n6", tri.family.size()},
                {"triangles_exact", tri.exact},
                {"triangles_reference", conj},
                {"triangle_family", tri.family},
                {"edges_n5", edges.family.size()},
                {"edges_exact", edges.exact},
                {"edges_reference", 5},
                {"edge_family", edges.family}};
  r.summary = "convex n=6 triangles: " + std::to_string(tri.family.size()) + " (reference (n/3)^2+1 = " +
              std::to_string(conj) + "), convex n=5 edges: " + std::to_string(edges.family.size()) +
              " (reference n = 5), certificates re-verified";
  return r;
}

struct SuiteEntry {
  int criterion;
  std::string name;
  double limit;
  std::function<SuiteReport()> run;
};

const std::vector<SuiteEntry>& entries() {
  static const std::vector<SuiteEntry> list{
      {1, "acceptance-sts9", kLimitSts9, suite_sts9},
      {2, "acceptance-thm4", kLimitThm4, suite_thm4},
      {3, "acceptance-thm3", kLimitThm3, suite_thm3},
      {4, "acceptance-thm32", kLimitThm32, suite_thm32},
      {5, "acceptance-thm33", kLimitThm33, suite_thm33},
      {6, "acceptance-thm5", kLimitThm5, suite_thm5},
      {7, "acceptance-coloring", kLimitColoring, suite_coloring},
      {8, "acceptance-edges", kLimitEdges, suite_edges},
      {9, "acceptance-search", kLimitSearch, suite_search},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : entries()) v.push_back(e.name);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name) {
  for (const auto& e : entries()) {
    if (e.name != name) continue;
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport r;
    try {
      r = e.run();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.summary = std::string("error: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.criterion = e.criterion;
    r.suite = e.name;
    r.time_limit = e.limit;
    if (r.seconds > e.limit) r.pass = false;
    return r;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

json report_json(const SuiteReport& r) {
  return {{"criterion", r.criterion}, {"suite", r.suite},           {"pass", r.pass},
          {"seconds", r.seconds},     {"time_limit", r.time_limit}, {"summary", r.summary},
          {"measured", r.measured}};
}

}  // namespace geochroma
