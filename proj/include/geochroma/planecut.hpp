// Discrete plane partitions of point sets by a few cut lines.
//
// Three families are provided: six parts cut by two parallel lines and a
// transversal, six angular sectors of three concurrent lines, and the
// nine-region refinement of the first family. Every cut line has integer
// coefficients and passes through no point of the partitioned set, so each
// region is described exactly by a pattern of line sides.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "geochroma/exactgeom.hpp"

namespace geochroma {

/// Oriented line a*x + b*y = c. side(p) is the sign of a*x + b*y - c.
struct CutLine {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  int side(const Point& p) const;

  friend bool operator==(const CutLine&, const CutLine&) = default;
};

struct SideConstraint {
  int cut = 0;
  int side = 0;

  friend bool operator==(const SideConstraint&, const SideConstraint&) = default;
};

struct RegionAssignment {
  std::vector<std::vector<int>> regions;
  std::vector<int> spill;
  std::vector<CutLine> cuts;
  /// patterns[r]: every member of region r satisfies each listed side.
  std::vector<std::vector<SideConstraint>> patterns;
  /// Strip index (0..2) of each region for the strip-based partitions;
  /// empty for the fan.
  std::vector<int> strip_of_region;
  /// Common point of the three fan lines.
  std::optional<RationalPoint> center;

  friend bool operator==(const RegionAssignment&, const RegionAssignment&) = default;
};

/// Two parallel cuts and a transversal dividing the points into six parts of
/// at least ceil(n/6) - 1 points. Regions 0..2 lie on the positive side of the
/// transversal (strips 0..2), regions 3..5 on its negative side.
RegionAssignment six_parts_two_parallel(const Configuration& config);
RegionAssignment six_parts_two_parallel(const Configuration& config, std::span<const int> subset);

/// Three concurrent cuts whose six sectors each receive exactly q listed
/// points, in clockwise order around the common point. Surplus points of a
/// sector go to spill.
RegionAssignment six_fan(const Configuration& config, int q);
RegionAssignment six_fan(const Configuration& config, std::span<const int> subset, int q);

/// Nine buckets R1..R9 of exactly q points. R1..R3 are the outer parts of the
/// upper row, R4..R6 the outer parts of the lower row and R7..R9 the middle
/// bands around the transversal, one per strip.
RegionAssignment nine_regions(const Configuration& config, int q);
RegionAssignment nine_regions(const Configuration& config, std::span<const int> subset, int q);

bool is_prime_power(int x);

/// Largest prime power <= x, for x >= 2.
int prime_power_below(int x);

}  // namespace geochroma
