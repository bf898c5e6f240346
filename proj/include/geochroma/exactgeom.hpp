// Exact integer geometry for complete geometric graphs.
//
// Every predicate here is evaluated in 128-bit integer arithmetic. Input
// coordinates are bounded by kCoordinateLimit in absolute value; that bound is
// enforced when a Configuration is built, so no predicate can overflow.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace geochroma {

using Coord = std::int64_t;

/// Largest admissible |x| or |y| of an input point.
inline constexpr Coord kCoordinateLimit = Coord{1} << 24;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Point with rational coordinates (x / w, y / w), w > 0. Used for cut
/// centers and query points that must never coincide with a vertex.
struct RationalPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t w = 1;
};

/// Unordered vertex pair stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(int a, int b);

enum class Mode { coordinates, convex };

/// A labelled vertex set. In coordinates mode the vertices carry integer
/// points in general position; in convex mode the vertices 0..n-1 are in
/// clockwise cyclic order and no coordinates exist.
class Configuration {
 public:
  Configuration() = default;

  /// Validates the coordinate bound, distinctness and general position.
  /// Throws std::invalid_argument on the first violation.
  static Configuration from_points(std::vector<Point> points);
  static Configuration convex(int n);

  Mode mode() const { return mode_; }
  bool is_convex() const { return mode_ == Mode::convex; }
  int size() const { return n_; }
  const std::vector<Point>& points() const { return points_; }
  const Point& point(int i) const { return points_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  Mode mode_ = Mode::convex;
  int n_ = 0;
  std::vector<Point> points_;
};

/// Sign of the signed area of pqr: +1 counterclockwise, -1 clockwise, 0 collinear.
int orient(const Point& p, const Point& q, const Point& r);
int orient(const RationalPoint& p, const Point& q, const Point& r);

/// True iff the open segments ab and cd intersect. Shared endpoints are not
/// crossings.
bool proper_cross(const Point& a, const Point& b, const Point& c, const Point& d);

/// Crossing rule for vertices in convex position: exactly one endpoint of e2
/// lies strictly inside the cyclic interval spanned by e1.
bool convex_cross(int n, Edge e1, Edge e2);

/// Crossing test dispatched on the configuration's mode.
bool edges_cross(const Configuration& config, Edge e1, Edge e2);

/// Two vertex sets conflict when they share a vertex or some edge of one
/// properly crosses some edge of the other. Both spans must be sorted.
bool parts_conflict(const Configuration& config, std::span<const int> a, std::span<const int> b);

/// Closed-triangle containment; a degenerate (collinear) triangle contains nothing.
bool in_closed_triangle(const RationalPoint& p, const Point& a, const Point& b, const Point& c);
bool in_open_triangle(const RationalPoint& p, const Point& a, const Point& b, const Point& c);

/// n distinct integer points in [-bound, bound]^2, no three collinear.
/// Deterministic for a fixed seed on every platform.
Configuration generate_general_position(int n, Coord bound, std::uint64_t seed);

Configuration convex_configuration(int n);

/// Number of unordered crossing edge pairs of the complete geometric graph.
std::int64_t crossing_pair_count(const Configuration& config);

}  // namespace geochroma
