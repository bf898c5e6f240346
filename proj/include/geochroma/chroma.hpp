// Conflict graphs, colorings, clique search and the bound evaluators.
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geochroma/decomposition.hpp"
#include "geochroma/surd.hpp"

namespace geochroma {

/// Symmetric, irreflexive adjacency among parts.
class ConflictGraph {
 public:
  explicit ConflictGraph(int m = 0);

  int size() const { return m_; }
  /// Parallel edges are merged by finalize().
  void add_edge(int a, int b);
  bool adjacent(int a, int b) const;
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::int64_t edge_count() const;

  /// Sorts and deduplicates adjacency lists; adjacent() needs it.
  void finalize();

 private:
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// Worker count from GEOCHROMA_THREADS (default: hardware concurrency).
int worker_count();

ConflictGraph conflict_graph(const Decomposition& d);
ConflictGraph conflict_graph(const Configuration& config, std::span<const Part> parts);

/// Same-colored conflicting pairs (i < j); empty iff the coloring is proper.
std::vector<std::pair<int, int>> verify_coloring(const Decomposition& d, const Coloring& c);
std::vector<std::pair<int, int>> verify_coloring(const ConflictGraph& g, const Coloring& c);

/// DSATUR: highest saturation first, then highest degree, then lowest index.
Coloring greedy_color(const ConflictGraph& g);

struct CliqueResult {
  std::vector<int> clique;  // sorted
  bool exact = false;
  std::int64_t nodes = 0;
};

/// Maximum clique by Bron-Kerbosch with pivoting, stopped after budget
/// recursion nodes. A seed clique, when given and valid, is the starting best.
CliqueResult clique_index(const ConflictGraph& g, std::int64_t budget = 5'000'000, std::span<const int> seed = {});

struct ChromaticResult {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  Coloring best;
  std::int64_t nodes = 0;
};

/// Iterative deepening over the palette size, seeded by a clique lower bound
/// and the greedy upper bound. Bounds are always sound. A known clique may be
/// passed to strengthen the lower bound.
ChromaticResult exact_chromatic_index(const ConflictGraph& g, std::int64_t budget = 20'000'000,
                                      std::span<const int> seed_clique = {});

/// Plain backtracking over all palettes 1..m in part-index order. Only for
/// small graphs; used to cross-check exact_chromatic_index.
int brute_force_chromatic_index(const ConflictGraph& g);

/// Length of a triangle on convex n vertices: the shortest cyclic edge length.
int triangle_length(int n, std::span<const int> tri);

struct TriangleCensus {
  QuadSurd x;
  std::vector<int> lengths;  // per part; -1 for non-triangles
  std::vector<bool> large;
  std::map<int, int> per_class_large;
  int max_class_large = 0;
  /// floor(x - 2)
  int class_limit = 0;
  std::vector<int> violating_classes;
};

/// Large means length * x >= n, decided exactly. Singleton-edge parts are
/// skipped; any other non-triangle part throws std::invalid_argument.
TriangleCensus triangle_census(const Decomposition& d, const Coloring& c, const QuadSurd& x);

/// 2(3 + sqrt 6).
QuadSurd census_threshold();

enum class BoundVariant { prop1, prop2, thm3, thm4, thm32, thm33, thm5 };

BoundVariant bound_variant_from_string(const std::string& name);
std::string to_string(BoundVariant v);

/// Exact closed forms: prop1 C(n,2)/3 + c n^1.5, prop2 C(n,2)/6 + c n^1.5,
/// thm3 2((n-6)/7)^2, thm4 (n/3)^2, thm32 n(k/2+1) with n = 18k+1,
/// thm33 (C(n,2)/3 - n^2/x)/(x-2) at x = 2(3+sqrt 6), thm5 n^2/9 + c n^1.5.
QuadSurd evaluate_bound(BoundVariant v, std::int64_t n, Rational c = Rational(0));

struct FamilyResult {
  std::vector<std::vector<int>> family;
  bool exact = false;
  std::int64_t nodes = 0;
};

/// Largest family of k-vertex parts (k in {2, 3}) that pairwise conflict and
/// are pairwise edge-disjoint.
FamilyResult max_intersecting_family(const Configuration& config, int k, std::int64_t budget = 50'000'000);

/// Largest set of pairwise edge-disjoint triangles whose closed triangle
/// contains p. Coordinates mode only; p must not be a vertex.
FamilyResult tau_point(const Configuration& config, const RationalPoint& p, std::int64_t budget = 50'000'000);

}  // namespace geochroma
