// Explicit decompositions of complete geometric graphs.
#pragma once

#include <cstdint>
#include <vector>

#include "geochroma/decomposition.hpp"
#include "geochroma/designs.hpp"
#include "geochroma/planecut.hpp"

namespace geochroma {

/// Coordinate bound used when a construction generates its own point set.
inline constexpr Coord kDefaultBound = 4096;

struct Thm3Result {
  /// distinguished: the q^2 X parts followed by the q^2 Y parts.
  Decomposition decomposition;
  int q = 0;
  RationalPoint center;
  /// Vertex labelled v4 of each distinguished part, in distinguished order.
  std::vector<int> apex;
  std::vector<int> s1;
  RegionAssignment fan;
};

/// Largest prime power q >= 3 with 7q + 6 <= n; 0 when none exists.
int thm3_order_for(int n);

Configuration thm3_configuration(int q, std::uint64_t seed, Coord bound = kDefaultBound);

/// Four-vertex parts X(i,j), Y(i,j) from a pencil of four lines of PG(2,q);
/// every other edge becomes a singleton part. Needs n >= 7q + 6 points.
Thm3Result thm3_construction(int q, const Configuration& config);

/// Convex n with 3 | n: (n/3)^2 triangles {k, i, j}, k in the first arc and
/// i, j matched round-robin between the other two arcs.
Decomposition thm4_construction(int n);

struct Thm5Stats {
  int colors = 0;
  int triangles = 0;
  int non_triangle_edges = 0;
  int k9_count = 0;
  int discarded_triangles = 0;
  /// Prime power used at each recursion node, depth-first order.
  std::vector<int> orders;

  friend bool operator==(const Thm5Stats&, const Thm5Stats&) = default;
};

struct Thm5Result {
  Decomposition decomposition;  // carries the coloring
  Thm5Stats stats;
};

inline constexpr int kThm5Threshold = 72;

/// Recursive nine-region triangle decomposition with its coloring. Leftover
/// edges become singleton parts colored first-fit.
Thm5Result thm5_construction(const Configuration& config, int threshold = kThm5Threshold);

struct Thm32Layout {
  DifferenceTripleTable table;
  /// Per box t = 1..k/2+1 (index t-1): triples of that box in row order and
  /// the rotation offset of each, chosen so the box's representatives are
  /// pairwise non-conflicting.
  std::vector<std::vector<DifferenceTriple>> box_triples;
  std::vector<std::vector<int>> box_offsets;
};

Thm32Layout thm32_layout(int k);

/// Cyclic triple system on n = 18k+1 convex points. The block of a box-t
/// triple at class rotation s gets color s + n(t-1).
Decomposition thm32_construction(int k);

/// Part indices carrying the given color.
std::vector<int> color_class(const Decomposition& d, int color);

}  // namespace geochroma
