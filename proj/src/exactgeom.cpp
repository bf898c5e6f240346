#include "geochroma/exactgeom.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace geochroma {

namespace {

using Wide = __int128;

int sign_of(Wide v) { return (v > 0) - (v < 0); }

Wide cross(Wide ax, Wide ay, Wide bx, Wide by) { return ax * by - ay * bx; }

// Uniform integer in [lo, hi] by rejection; std::uniform_int_distribution is
// not reproducible across standard library implementations.
Coord draw(std::mt19937_64& rng, Coord lo, Coord hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return lo + static_cast<Coord>(r % span);
}

bool in_interval(int lo, int hi, int x) { return lo < x && x < hi; }

}  // namespace

Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("edge endpoints must differ");
  return a < b ? Edge{a, b} : Edge{b, a};
}

Configuration Configuration::from_points(std::vector<Point> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p.x < -kCoordinateLimit || p.x > kCoordinateLimit || p.y < -kCoordinateLimit ||
        p.y > kCoordinateLimit) {
      throw std::invalid_argument("point " + std::to_string(i) + " exceeds the coordinate limit 2^24");
    }
  }
  std::vector<Point> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("configuration contains a repeated point");
  }
  const auto n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(points[i], points[j], points[k]) == 0) {
          throw std::invalid_argument("points " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                      std::to_string(k) + " are collinear");
        }
      }
    }
  }
  Configuration c;
  c.mode_ = Mode::coordinates;
  c.n_ = static_cast<int>(n);
  c.points_ = std::move(points);
  return c;
}

Configuration Configuration::convex(int n) {
  if (n < 3) throw std::invalid_argument("convex configuration needs n >= 3");
  Configuration c;
  c.mode_ = Mode::convex;
  c.n_ = n;
  return c;
}

int orient(const Point& p, const Point& q, const Point& r) {
  return sign_of(cross(Wide{q.x} - p.x, Wide{q.y} - p.y, Wide{r.x} - p.x, Wide{r.y} - p.y));
}

int orient(const RationalPoint& p, const Point& q, const Point& r) {
  const Wide qx = Wide{q.x} * p.w - p.x;
  const Wide qy = Wide{q.y} * p.w - p.y;
  const Wide rx = Wide{r.x} * p.w - p.x;
  const Wide ry = Wide{r.y} * p.w - p.y;
  return sign_of(cross(qx, qy, rx, ry));
}

bool proper_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a == c || a == d || b == c || b == d) return false;
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool convex_cross(int n, Edge e1, Edge e2) {
  (void)n;
  if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) return false;
  return in_interval(e1.u, e1.v, e2.u) != in_interval(e1.u, e1.v, e2.v);
}

bool edges_cross(const Configuration& config, Edge e1, Edge e2) {
  if (config.is_convex()) return convex_cross(config.size(), e1, e2);
  return proper_cross(config.point(e1.u), config.point(e1.v), config.point(e2.u), config.point(e2.v));
}

bool parts_conflict(const Configuration& config, std::span<const int> a, std::span<const int> b) {
  // Sorted spans: linear merge for a shared vertex.
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const Edge e1{a[i], a[j]};
      for (std::size_t k = 0; k < b.size(); ++k) {
        for (std::size_t l = k + 1; l < b.size(); ++l) {
          if (edges_cross(config, e1, Edge{b[k], b[l]})) return true;
        }
      }
    }
  }
  return false;
}

bool in_closed_triangle(const RationalPoint& p, const Point& a, const Point& b, const Point& c) {
  const int s = orient(a, b, c);
  if (s == 0) return false;
  return orient(p, a, b) * s >= 0 && orient(p, b, c) * s >= 0 && orient(p, c, a) * s >= 0;
}

bool in_open_triangle(const RationalPoint& p, const Point& a, const Point& b, const Point& c) {
  const int s = orient(a, b, c);
  if (s == 0) return false;
  return orient(p, a, b) * s > 0 && orient(p, b, c) * s > 0 && orient(p, c, a) * s > 0;
}

Configuration generate_general_position(int n, Coord bound, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("generate_general_position needs n >= 1");
  if (bound < 1 || bound > kCoordinateLimit) {
    throw std::invalid_argument("coordinate bound must lie in [1, 2^24]");
  }
  const Wide cells = (Wide{2} * bound + 1) * (Wide{2} * bound + 1);
  if (cells < n) {
    throw std::invalid_argument("bound " + std::to_string(bound) + " cannot host " + std::to_string(n) + " points");
  }
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  std::set<Point> seen;
  pts.reserve(static_cast<std::size_t>(n));
  const long long max_attempts = 2000LL * n + 10000;
  long long attempts = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (++attempts > max_attempts) {
      throw std::runtime_error("could not place " + std::to_string(n) + " points in general position within bound " +
                               std::to_string(bound) + " (placed " + std::to_string(pts.size()) + ")");
    }
    const Point cand{draw(rng, -bound, bound), draw(rng, -bound, bound)};
    if (seen.contains(cand)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (orient(pts[i], pts[j], cand) == 0) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    pts.push_back(cand);
    seen.insert(cand);
  }
  return Configuration::from_points(std::move(pts));
}

Configuration convex_configuration(int n) { return Configuration::convex(n); }

std::int64_t crossing_pair_count(const Configuration& config) {
  const int n = config.size();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  std::int64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges_cross(config, edges[i], edges[j])) ++count;
    }
  }
  return count;
}

}  // namespace geochroma
