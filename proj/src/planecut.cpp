#include "geochroma/planecut.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "geochroma/errors.hpp"

namespace geochroma {

namespace {

using Wide = __int128;

int sign_of(Wide v) { return (v > 0) - (v < 0); }

// Cut coefficients are kept small enough that a*x + b*y fits comfortably in
// 128 bits for any admissible point.
constexpr Wide kCoefficientLimit = Wide{1} << 62;

std::optional<CutLine> make_cut(Wide a, Wide b, Wide c) {
  if (a == 0 && b == 0) return std::nullopt;
  for (Wide v : {a, b, c}) {
    if (v > kCoefficientLimit || v < -kCoefficientLimit) return std::nullopt;
  }
  return CutLine{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), static_cast<std::int64_t>(c)};
}

Wide eval(const CutLine& l, const Point& p) { return Wide{l.a} * p.x + Wide{l.b} * p.y - l.c; }

std::vector<int> all_indices(const Configuration& config) {
  std::vector<int> idx(static_cast<std::size_t>(config.size()));
  std::iota(idx.begin(), idx.end(), 0);
  return idx;
}

void require_coordinates(const Configuration& config, const char* who) {
  if (config.is_convex()) throw std::invalid_argument(std::string(who) + " needs a coordinates configuration");
}

void check_subset(const Configuration& config, std::span<const int> subset) {
  std::vector<int> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument("subset has repeated vertices");
  for (int v : s) {
    if (v < 0 || v >= config.size()) throw std::invalid_argument("subset vertex out of range");
  }
}

// Candidate normal directions for the parallel cuts: the axis directions first,
// then small primitive vectors.
std::vector<std::array<std::int64_t, 2>> candidate_normals() {
  std::vector<std::array<std::int64_t, 2>> out{{1, 0}, {0, 1}};
  std::vector<std::array<std::int64_t, 2>> rest;
  constexpr std::int64_t r = 8;
  for (std::int64_t a = -r; a <= r; ++a) {
    for (std::int64_t b = 0; b <= r; ++b) {
      if (b == 0 && a <= 0) continue;
      if (std::gcd(a, b) != 1) continue;
      if ((a == 1 && b == 0) || (a == 0 && b == 1)) continue;
      rest.push_back({a, b});
    }
  }
  std::stable_sort(rest.begin(), rest.end(), [](const auto& u, const auto& v) {
    const auto nu = std::max(std::abs(u[0]), std::abs(u[1]));
    const auto nv = std::max(std::abs(v[0]), std::abs(v[1]));
    if (nu != nv) return nu < nv;
    return u < v;
  });
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

// Cut strictly between two consecutive values g_lo < g_hi of the linear form
// (a, b): negative below, positive above.
std::optional<CutLine> parallel_cut(std::int64_t a, std::int64_t b, Wide g_lo, Wide g_hi) {
  if (!(g_lo < g_hi)) return std::nullopt;
  return make_cut(Wide{2} * a, Wide{2} * b, g_lo + g_hi);
}

struct SixSplit {
  CutLine l1, l2, l3;
  std::array<std::vector<int>, 6> parts;  // 0..2 positive side of l3, 3..5 negative
};

// Line through a and b nudged so that a lands on side sa and b on side sb,
// without moving any other listed point across it.
std::optional<CutLine> nudged_line(const Configuration& config, std::span<const int> pts, int ia, int ib, int sa,
                                   int sb) {
  const Point& a = config.point(ia);
  const Point& b = config.point(ib);
  const Wide dx = Wide{b.x} - a.x;
  const Wide dy = Wide{b.y} - a.y;
  const Wide nx = -dy;
  const Wide ny = dx;
  if (sa == sb) {
    // L(p) = 2 n.(p - a) + s; points off the line have |n.(p - a)| >= 1.
    return make_cut(2 * nx, 2 * ny, 2 * (nx * a.x + ny * a.y) - sa);
  }
  // Rotate about the midpoint: L(p) = (K n + s d).(2p - a - b), s = sb.
  Wide k = 1;
  for (int v : pts) {
    if (v == ia || v == ib) continue;
    const Point& p = config.point(v);
    const Wide base = nx * (Wide{p.x} - a.x) + ny * (Wide{p.y} - a.y);
    const Wide along = dx * (Wide{2} * p.x - a.x - b.x) + dy * (Wide{2} * p.y - a.y - b.y);
    const Wide abs_base = base < 0 ? -base : base;
    const Wide abs_along = along < 0 ? -along : along;
    k = std::max(k, abs_along / (2 * abs_base) + 1);
  }
  const Wide s = sb;
  const Wide ca = k * nx + s * dx;
  const Wide cb = k * ny + s * dy;
  return make_cut(2 * ca, 2 * cb, ca * (Wide{a.x} + b.x) + cb * (Wide{a.y} + b.y));
}

// Enumerates two parallel cuts splitting the points into thirds and a
// transversal through one point of each outer third; stops at the first split
// for which both predicates hold.
std::optional<SixSplit> search_six(const Configuration& config, std::span<const int> subset,
                                   const std::function<bool(const std::array<int, 6>&)>& counts_ok,
                                   const std::function<bool(const SixSplit&)>& accept) {
  const int m = static_cast<int>(subset.size());
  const int t = m / 3;
  if (t < 1) return std::nullopt;
  for (const auto& normal : candidate_normals()) {
    std::vector<std::pair<Wide, int>> f;
    f.reserve(subset.size());
    for (int v : subset) {
      const Point& p = config.point(v);
      f.push_back({Wide{normal[0]} * p.x + Wide{normal[1]} * p.y, v});
    }
    std::sort(f.begin(), f.end());
    auto l1 = parallel_cut(normal[0], normal[1], f[t - 1].first, f[t].first);
    auto l2 = parallel_cut(normal[0], normal[1], f[m - t - 1].first, f[m - t].first);
    if (!l1 || !l2) continue;
    std::vector<int> strip_of(static_cast<std::size_t>(config.size()), -1);
    for (int i = 0; i < m; ++i) strip_of[f[i].second] = i < t ? 0 : (i < m - t ? 1 : 2);
    for (int ai = 0; ai < t; ++ai) {
      for (int bi = m - t; bi < m; ++bi) {
        const int ia = f[ai].second;
        const int ib = f[bi].second;
        const Point& a = config.point(ia);
        const Point& b = config.point(ib);
        std::array<int, 3> pos{0, 0, 0};
        std::array<int, 3> neg{0, 0, 0};
        for (int v : subset) {
          if (v == ia || v == ib) continue;
          if (orient(a, b, config.point(v)) > 0) {
            ++pos[strip_of[v]];
          } else {
            ++neg[strip_of[v]];
          }
        }
        for (int sa : {1, -1}) {
          for (int sb : {1, -1}) {
            std::array<int, 6> counts{pos[0] + (sa > 0), pos[1], pos[2] + (sb > 0),
                                      neg[0] + (sa < 0), neg[1], neg[2] + (sb < 0)};
            if (!counts_ok(counts)) continue;
            auto l3 = nudged_line(config, subset, ia, ib, sa, sb);
            if (!l3) continue;
            SixSplit split{*l1, *l2, *l3, {}};
            bool consistent = true;
            for (int v : subset) {
              const int s = l3->side(config.point(v));
              const int c = strip_of[v];
              if (s == 0 || l1->side(config.point(v)) == 0 || l2->side(config.point(v)) == 0) consistent = false;
              split.parts[static_cast<std::size_t>(s > 0 ? c : c + 3)].push_back(v);
            }
            if (!consistent) continue;
            for (auto& p : split.parts) std::sort(p.begin(), p.end());
            for (int r = 0; r < 6; ++r) {
              if (static_cast<int>(split.parts[r].size()) != counts[r]) consistent = false;
            }
            if (!consistent) throw std::logic_error("nudged transversal moved a point across");
            if (accept(split)) return split;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<SideConstraint> strip_pattern(int strip) {
  if (strip == 0) return {{0, -1}};
  if (strip == 1) return {{0, 1}, {1, -1}};
  return {{1, 1}};
}

}  // namespace

int CutLine::side(const Point& p) const { return sign_of(eval(*this, p)); }

RegionAssignment six_parts_two_parallel(const Configuration& config) {
  const auto idx = all_indices(config);
  return six_parts_two_parallel(config, idx);
}

RegionAssignment six_parts_two_parallel(const Configuration& config, std::span<const int> subset) {
  require_coordinates(config, "six_parts_two_parallel");
  check_subset(config, subset);
  const int m = static_cast<int>(subset.size());
  if (m < 6) throw std::invalid_argument("six_parts_two_parallel needs at least 6 points");
  const int need = (m + 5) / 6 - 1;
  auto split = search_six(
      config, subset,
      [need](const std::array<int, 6>& c) { return std::all_of(c.begin(), c.end(), [need](int x) { return x >= need; }); },
      [](const SixSplit&) { return true; });
  if (!split) {
    throw SearchExhausted("six_parts_two_parallel: no split with parts >= " + std::to_string(need) + " among " +
                          std::to_string(m) + " points");
  }
  RegionAssignment out;
  out.cuts = {split->l1, split->l2, split->l3};
  for (int r = 0; r < 6; ++r) {
    out.regions.push_back(split->parts[r]);
    auto pat = strip_pattern(r % 3);
    pat.push_back({2, r < 3 ? 1 : -1});
    out.patterns.push_back(pat);
    out.strip_of_region.push_back(r % 3);
  }
  return out;
}

RegionAssignment nine_regions(const Configuration& config, int q) {
  const auto idx = all_indices(config);
  return nine_regions(config, idx, q);
}

RegionAssignment nine_regions(const Configuration& config, std::span<const int> subset, int q) {
  require_coordinates(config, "nine_regions");
  check_subset(config, subset);
  const int m = static_cast<int>(subset.size());
  if (q < 1) throw std::invalid_argument("nine_regions needs q >= 1");
  if (m < 9 * q) throw std::invalid_argument("nine_regions needs at least 9q points");

  RegionAssignment result;
  auto accept = [&](const SixSplit& split) {
    RegionAssignment out;
    out.cuts = {split.l1, split.l2, split.l3};
    out.regions.assign(9, {});
    out.patterns.assign(9, {});
    out.strip_of_region = {0, 1, 2, 0, 1, 2, 0, 1, 2};
    const CutLine& l3 = split.l3;
    for (int c = 0; c < 3; ++c) {
      std::vector<std::pair<Wide, int>> g;
      for (int r : {c, c + 3}) {
        for (int v : split.parts[r]) {
          const Point& p = config.point(v);
          g.push_back({Wide{l3.a} * p.x + Wide{l3.b} * p.y, v});
        }
      }
      std::sort(g.begin(), g.end());
      const int total = static_cast<int>(g.size());
      const int below = static_cast<int>(split.parts[c + 3].size());
      const int w0 = std::clamp(below - q / 2, q, total - 2 * q);
      // Boundaries sit between positions (i - 1, i).
      const std::array<int, 4> at{q, total - q, w0, w0 + q};
      std::array<CutLine, 4> lines{};
      for (int j = 0; j < 4; ++j) {
        auto cut = parallel_cut(l3.a, l3.b, g[at[j] - 1].first, g[at[j]].first);
        if (!cut) return false;
        lines[j] = *cut;
      }
      const int base = static_cast<int>(out.cuts.size());
      out.cuts.insert(out.cuts.end(), lines.begin(), lines.end());
      for (int i = 0; i < total; ++i) {
        const int v = g[i].second;
        if (i < q) {
          out.regions[c + 3].push_back(v);
        } else if (i >= total - q) {
          out.regions[c].push_back(v);
        } else if (i >= w0 && i < w0 + q) {
          out.regions[c + 6].push_back(v);
        } else {
          out.spill.push_back(v);
        }
      }
      auto top = strip_pattern(c);
      top.push_back({2, 1});
      top.push_back({base + 1, 1});
      auto bottom = strip_pattern(c);
      bottom.push_back({2, -1});
      bottom.push_back({base, -1});
      auto band = strip_pattern(c);
      band.push_back({base + 2, 1});
      band.push_back({base + 3, -1});
      out.patterns[c] = top;
      out.patterns[c + 3] = bottom;
      out.patterns[c + 6] = band;
    }
    for (auto& r : out.regions) std::sort(r.begin(), r.end());
    std::sort(out.spill.begin(), out.spill.end());
    result = std::move(out);
    return true;
  };
  auto split = search_six(
      config, subset,
      [q](const std::array<int, 6>& c) {
        for (int i = 0; i < 3; ++i) {
          if (c[i] < q || c[i + 3] < q || c[i] + c[i + 3] < 3 * q) return false;
        }
        return true;
      },
      accept);
  if (!split) {
    throw SearchExhausted("nine_regions: no admissible split for q=" + std::to_string(q) + " among " +
                          std::to_string(m) + " points");
  }
  return result;
}

RegionAssignment six_fan(const Configuration& config, int q) {
  const auto idx = all_indices(config);
  return six_fan(config, idx, q);
}

RegionAssignment six_fan(const Configuration& config, std::span<const int> subset, int q) {
  require_coordinates(config, "six_fan");
  check_subset(config, subset);
  const int m = static_cast<int>(subset.size());
  if (q < 1) throw std::invalid_argument("six_fan needs q >= 1");
  if (m < 6 * q) throw std::invalid_argument("six_fan needs at least 6q points");

  // Candidate centers (scaled by 6): pair midpoints and triple centroids.
  struct Center {
    Wide x, y;
    Wide dist;
  };
  std::vector<Center> centers;
  Wide sx = 0, sy = 0;
  for (int v : subset) {
    sx += config.point(v).x;
    sy += config.point(v).y;
  }
  auto push = [&](Wide x, Wide y) {
    const Wide dx = x * m - 6 * sx;
    const Wide dy = y * m - 6 * sy;
    centers.push_back({x, y, dx * dx + dy * dy});
  };
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Point& a = config.point(subset[i]);
      const Point& b = config.point(subset[j]);
      push(Wide{3} * (a.x + b.x), Wide{3} * (a.y + b.y));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        const Point& a = config.point(subset[i]);
        const Point& b = config.point(subset[j]);
        const Point& c = config.point(subset[k]);
        const Wide x = Wide{2} * (a.x + b.x + c.x);
        const Wide y = Wide{2} * (a.y + b.y + c.y);
        bool on_vertex = false;
        for (int v : subset) {
          if (Wide{6} * config.point(v).x == x && Wide{6} * config.point(v).y == y) on_vertex = true;
        }
        if (!on_vertex) push(x, y);
      }
    }
  }
  std::stable_sort(centers.begin(), centers.end(), [](const Center& a, const Center& b) { return a.dist < b.dist; });

  struct Dir {
    Wide x, y;
    bool flipped;
    int vertex;
  };
  auto cross = [](Wide ax, Wide ay, Wide bx, Wide by) { return ax * by - ay * bx; };

  for (const Center& cen : centers) {
    std::vector<Dir> dirs;
    dirs.reserve(subset.size());
    for (int v : subset) {
      Wide dx = Wide{6} * config.point(v).x - cen.x;
      Wide dy = Wide{6} * config.point(v).y - cen.y;
      bool flipped = false;
      if (dy < 0 || (dy == 0 && dx < 0)) {
        dx = -dx;
        dy = -dy;
        flipped = true;
      }
      dirs.push_back({dx, dy, flipped, v});
    }
    // Angle order on [0, pi); collinear directions share a group.
    std::stable_sort(dirs.begin(), dirs.end(),
                     [&](const Dir& a, const Dir& b) { return cross(a.x, a.y, b.x, b.y) > 0; });
    std::vector<int> group_start;
    for (int i = 0; i < m; ++i) {
      if (i == 0 || cross(dirs[i - 1].x, dirs[i - 1].y, dirs[i].x, dirs[i].y) != 0) group_start.push_back(i);
    }
    const int groups = static_cast<int>(group_start.size());
    if (groups < 3) continue;
    std::vector<int> group_of(static_cast<std::size_t>(m));
    for (int g = 0; g < groups; ++g) {
      const int end = g + 1 < groups ? group_start[g + 1] : m;
      for (int i = group_start[g]; i < end; ++i) group_of[i] = g;
    }
    // pu[g], pf[g]: unflipped / flipped counts in groups [0, g).
    std::vector<int> pu(static_cast<std::size_t>(groups) + 1, 0), pf(static_cast<std::size_t>(groups) + 1, 0);
    for (int i = 0; i < m; ++i) {
      (dirs[i].flipped ? pf : pu)[group_of[i] + 1]++;
    }
    for (int g = 0; g < groups; ++g) {
      pu[g + 1] += pu[g];
      pf[g + 1] += pf[g];
    }
    auto range_u = [&](int lo, int hi) { return pu[hi] - pu[lo]; };  // groups [lo, hi)
    auto range_f = [&](int lo, int hi) { return pf[hi] - pf[lo]; };

    // Gap g lies between group g and group g + 1 (the last gap wraps through pi).
    for (int gi = 0; gi < groups; ++gi) {
      for (int gj = gi + 1; gj < groups; ++gj) {
        if (range_u(gi + 1, gj + 1) < q || range_f(gi + 1, gj + 1) < q) continue;
        for (int gk = gj + 1; gk < groups; ++gk) {
          const std::array<int, 6> counts{
              range_u(gi + 1, gj + 1), range_u(gj + 1, gk + 1), range_u(gk + 1, groups) + range_f(0, gi + 1),
              range_f(gi + 1, gj + 1), range_f(gj + 1, gk + 1), range_f(gk + 1, groups) + range_u(0, gi + 1)};
          if (std::any_of(counts.begin(), counts.end(), [q](int c) { return c < q; })) continue;

          auto gap_dir = [&](int g) -> std::array<Wide, 2> {
            const Dir& lo = dirs[group_start[g]];
            if (g + 1 < groups) {
              const Dir& hi = dirs[group_start[g + 1]];
              return {lo.x + hi.x, lo.y + hi.y};
            }
            const Dir& first = dirs[0];
            const Dir& last = dirs[group_start[g]];
            return {last.x - first.x, last.y - first.y};
          };
          const std::array<std::array<Wide, 2>, 3> u{gap_dir(gi), gap_dir(gj), gap_dir(gk)};
          RegionAssignment out;
          bool ok = true;
          for (const auto& d : u) {
            // Normal (-u_y, u_x); L(p) = n.(6p - P).
            const Wide nx = -d[1];
            const Wide ny = d[0];
            auto cut = make_cut(6 * nx, 6 * ny, nx * cen.x + ny * cen.y);
            if (!cut) {
              ok = false;
              break;
            }
            out.cuts.push_back(*cut);
          }
          if (!ok) continue;

          // Sector s (counterclockwise) by group arcs.
          std::array<std::vector<int>, 6> sector;
          for (int i = 0; i < m; ++i) {
            const int g = group_of[i];
            const bool f = dirs[i].flipped;
            int s;
            if (g > gi && g <= gj) {
              s = f ? 3 : 0;
            } else if (g > gj && g <= gk) {
              s = f ? 4 : 1;
            } else if (g > gk) {
              s = f ? 5 : 2;
            } else {
              s = f ? 2 : 5;
            }
            sector[s].push_back(dirs[i].vertex);
          }
          // Ray directions in counterclockwise order and interior directions.
          const std::array<std::array<Wide, 2>, 6> rays{u[0], u[1], u[2],
                                                        std::array<Wide, 2>{-u[0][0], -u[0][1]},
                                                        std::array<Wide, 2>{-u[1][0], -u[1][1]},
                                                        std::array<Wide, 2>{-u[2][0], -u[2][1]}};
          std::array<std::vector<SideConstraint>, 6> pattern;
          for (int s = 0; s < 6; ++s) {
            const Wide wx = rays[s][0] + rays[(s + 1) % 6][0];
            const Wide wy = rays[s][1] + rays[(s + 1) % 6][1];
            for (int l = 0; l < 3; ++l) {
              pattern[s].push_back({l, sign_of(Wide{out.cuts[l].a} * wx + Wide{out.cuts[l].b} * wy)});
            }
          }
          // Clockwise from sector 0.
          for (int s : {0, 5, 4, 3, 2, 1}) {
            auto members = sector[s];
            std::sort(members.begin(), members.end());
            out.regions.emplace_back(members.begin(), members.begin() + q);
            out.spill.insert(out.spill.end(), members.begin() + q, members.end());
            out.patterns.push_back(pattern[s]);
          }
          std::sort(out.spill.begin(), out.spill.end());
          out.center = RationalPoint{static_cast<std::int64_t>(cen.x), static_cast<std::int64_t>(cen.y), 6};
          return out;
        }
      }
    }
  }
  throw SearchExhausted("six_fan: no center among " + std::to_string(centers.size()) + " candidates gives " +
                        std::to_string(q) + " points per sector for " + std::to_string(m) + " points");
}

bool is_prime_power(int x) {
  if (x < 2) return false;
  for (int p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      while (x % p == 0) x /= p;
      return x == 1;
    }
  }
  return true;
}

int prime_power_below(int x) {
  if (x < 2) throw std::invalid_argument("prime_power_below needs x >= 2");
  while (!is_prime_power(x)) --x;
  return x;
}

}  // namespace geochroma
