#include "geochroma/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "geochroma/errors.hpp"

namespace geochroma {

namespace {

std::vector<int> sorted3(int a, int b, int c) {
  std::vector<int> v{a, b, c};
  std::sort(v.begin(), v.end());
  return v;
}

// Bottom q points of the subset, separated from the rest by a line of one of a
// few small normal directions.
std::vector<int> bottom_strip(const Configuration& config, std::vector<int> pts, int q, std::vector<int>& rest) {
  const std::array<std::array<Coord, 2>, 6> normals{{{0, 1}, {1, 0}, {1, 1}, {-1, 1}, {1, 2}, {2, 1}}};
  for (const auto& nrm : normals) {
    auto key = [&](int v) { return nrm[0] * config.point(v).x + nrm[1] * config.point(v).y; };
    std::stable_sort(pts.begin(), pts.end(), [&](int a, int b) {
      const auto ka = key(a), kb = key(b);
      return ka != kb ? ka < kb : a < b;
    });
    if (key(pts[q - 1]) == key(pts[q])) continue;
    rest.assign(pts.begin() + q, pts.end());
    return {pts.begin(), pts.begin() + q};
  }
  throw SearchExhausted("thm3: no direction separates a bottom strip of " + std::to_string(q) + " points");
}

}  // namespace

int thm3_order_for(int n) {
  for (int q = (n - 6) / 7; q >= 3; --q) {
    if (is_prime_power(q) && field_supported(q)) return q;
  }
  return 0;
}

Configuration thm3_configuration(int q, std::uint64_t seed, Coord bound) {
  return generate_general_position(7 * q + 6, bound, seed);
}

Thm3Result thm3_construction(int q, const Configuration& config) {
  if (q < 3 || !is_prime_power(q)) throw std::invalid_argument("thm3 needs a prime power q >= 3");
  if (config.is_convex()) throw std::invalid_argument("thm3 needs a coordinates configuration");
  const int n = config.size();
  if (n < 7 * q + 6) throw std::invalid_argument("thm3 needs at least 7q+6 points");

  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> above;
  Thm3Result out;
  out.q = q;
  out.s1 = bottom_strip(config, all, q, above);
  // S' is the next 6q+6 points in the same order; the rest are left out.
  std::vector<int> sprime(above.begin(), above.begin() + 6 * q + 6);
  out.fan = six_fan(config, sprime, q);
  out.center = *out.fan.center;

  const auto plane = projective_plane(q);
  const int z = 0;
  const auto pencil = pencil_through(plane, z, 4);
  // Position of each plane point on the four pencil lines.
  std::vector<std::pair<int, int>> where(plane.points.size(), {-1, -1});
  for (int l = 0; l < 4; ++l) {
    for (int i = 0; i < q; ++i) where[pencil[l][i]] = {l, i};
  }
  // Sectors in clockwise order: S2..S7 carry v1, u1, v2, u2, v3, u3.
  const auto& S = out.fan.regions;
  const std::vector<int>& v1 = S[0];
  const std::vector<int>& u1 = S[1];
  const std::vector<int>& v2 = S[2];
  const std::vector<int>& u2 = S[3];
  const std::vector<int>& v3 = S[4];
  const std::vector<int>& u3 = S[5];
  const std::vector<int>& v4 = out.s1;

  Decomposition d;
  d.config = config;
  std::vector<int> apex;
  for (int family = 0; family < 2; ++family) {
    for (int i = 0; i < q; ++i) {
      for (int j = 0; j < q; ++j) {
        const int line = plane.line_of(pencil[0][i], pencil[3][j]);
        int i2 = -1, j3 = -1;
        for (int p : plane.lines[line]) {
          if (where[p].first == 1) i2 = where[p].second;
          if (where[p].first == 2) j3 = where[p].second;
        }
        if (i2 < 0 || j3 < 0) throw std::logic_error("plane line misses a pencil line");
        std::vector<int> verts = family == 0 ? std::vector<int>{v1[i], v4[j], v2[i2], v3[j3]}
                                             : std::vector<int>{u1[i], v4[j], u2[i2], u3[j3]};
        std::sort(verts.begin(), verts.end());
        const std::string tag = std::string(family == 0 ? "X(" : "Y(") + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")";
        d.distinguished.push_back(static_cast<int>(d.parts.size()));
        d.parts.push_back({verts, tag});
        apex.push_back(v4[j]);
      }
    }
  }
  add_singleton_edges(d);
  canonicalize(d);
  d.metadata["construction"] = "thm3";
  d.metadata["q"] = q;
  d.metadata["n"] = n;
  d.metadata["distinguished"] = d.distinguished.size();
  d.metadata["center"] = {out.center.x, out.center.y, out.center.w};
  out.decomposition = std::move(d);
  out.apex = std::move(apex);
  return out;
}

Decomposition thm4_construction(int n) {
  if (n < 6 || n % 3 != 0) throw std::invalid_argument("thm4 needs n >= 6 divisible by 3");
  const int t = n / 3;
  Decomposition d;
  d.config = Configuration::convex(n);
  // Matching M_k pairs i in the second arc with j in the third, i + j = k mod t.
  for (int k = 0; k < t; ++k) {
    for (int i = 0; i < t; ++i) {
      const int j = ((k - i) % t + t) % t;
      d.distinguished.push_back(static_cast<int>(d.parts.size()));
      d.parts.push_back({sorted3(k, t + i, 2 * t + j), "triangle"});
    }
  }
  add_singleton_edges(d);
  canonicalize(d);
  d.metadata["construction"] = "thm4";
  d.metadata["n"] = n;
  d.metadata["distinguished"] = d.distinguished.size();
  return d;
}

namespace {

class Thm5Builder {
 public:
  Thm5Builder(const Configuration& config, int threshold)
      : config_(config), threshold_(threshold), n_(config.size()),
        used_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0) {
    d_.config = config;
  }

  Thm5Result run() {
    std::vector<int> all(static_cast<std::size_t>(n_));
    std::iota(all.begin(), all.end(), 0);
    const int span = level(all, 0);
    const int triangles = static_cast<int>(d_.parts.size());
    first_fit_leftovers(span);
    Thm5Result r;
    r.stats = stats_;
    r.stats.triangles = triangles;
    r.stats.non_triangle_edges = static_cast<int>(d_.parts.size()) - triangles;
    // Compact color ids.
    std::vector<int> ids = colors_;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int& c : colors_) c = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), c) - ids.begin());
    d_.coloring = make_coloring(colors_);
    r.stats.colors = d_.coloring->palette;
    canonicalize(d_);
    d_.metadata["construction"] = "thm5";
    d_.metadata["n"] = n_;
    d_.metadata["threshold"] = threshold_;
    d_.metadata["colors"] = r.stats.colors;
    d_.metadata["triangles"] = r.stats.triangles;
    d_.metadata["non_triangle_edges"] = r.stats.non_triangle_edges;
    d_.metadata["k9_count"] = r.stats.k9_count;
    d_.metadata["discarded_triangles"] = r.stats.discarded_triangles;
    d_.metadata["orders"] = r.stats.orders;
    r.decomposition = std::move(d_);
    return r;
  }

 private:
  char& used(int u, int v) {
    if (u > v) std::swap(u, v);
    return used_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }

  void add_triangle(int a, int b, int c, int color) {
    if (used(a, b) || used(a, c) || used(b, c)) {
      ++stats_.discarded_triangles;
      return;
    }
    used(a, b) = used(a, c) = used(b, c) = 1;
    d_.parts.push_back({sorted3(a, b, c), "triangle"});
    colors_.push_back(color);
  }

  // Returns the number of color ids consumed from base on.
  int level(const std::vector<int>& subset, int base) {
    const int m = static_cast<int>(subset.size());
    if (m < threshold_ || m / 9 < 2) return 0;
    int q = prime_power_below(m / 9);
    RegionAssignment regions;
    bool found = false;
    while (q >= 8) {
      if (field_supported(q)) {
        try {
          regions = nine_regions(config_, subset, q);
          found = true;
          break;
        } catch (const SearchExhausted&) {
        }
      }
      q = prime_power_below(q - 1);
    }
    if (!found) return 0;
    stats_.orders.push_back(q);

    const auto plane = projective_plane(q);
    const int z = 0;
    const auto pencil = pencil_through(plane, z, 9);
    std::vector<std::pair<int, int>> where(plane.points.size(), {-1, -1});
    for (int l = 0; l < 9; ++l) {
      for (int i = 0; i < q; ++i) where[pencil[l][i]] = {l, i};
    }
    const auto design = sts9();
    // Color offset of each STS(9) block: the top and bottom rows share one
    // color, the band row gets its own, the within-strip class shares one, and
    // the six diagonal triangles get one each.
    std::array<int, 12> offset{};
    offset[design.classes[0][0]] = 0;
    offset[design.classes[0][1]] = 0;
    offset[design.classes[0][2]] = 1;
    for (int b : design.classes[1]) offset[b] = 2;
    int next = 3;
    for (int c = 2; c < 4; ++c) {
      for (int b : design.classes[c]) offset[b] = next++;
    }
    int k9 = 0;
    for (int line = 0; line < static_cast<int>(plane.lines.size()); ++line) {
      if (plane.incident(z, line)) continue;
      std::array<int, 9> w{};
      w.fill(-1);
      for (int p : plane.lines[line]) {
        if (where[p].first >= 0) w[where[p].first] = regions.regions[where[p].first][where[p].second];
      }
      const int color_base = base + 9 * k9;
      for (std::size_t b = 0; b < design.design.blocks.size(); ++b) {
        const auto& blk = design.design.blocks[b];
        add_triangle(w[blk[0]], w[blk[1]], w[blk[2]], color_base + offset[b]);
      }
      ++k9;
    }
    stats_.k9_count += k9;
    const int top_span = 9 * k9;

    // Strips by the two parallel cuts; spill points travel with their strip.
    std::array<std::vector<int>, 3> strips;
    for (int v : subset) {
      const Point& p = config_.point(v);
      const int strip = regions.cuts[0].side(p) < 0 ? 0 : (regions.cuts[1].side(p) < 0 ? 1 : 2);
      strips[strip].push_back(v);
    }
    int below = 0;
    for (const auto& s : strips) below = std::max(below, level(s, base + top_span));
    return top_span + below;
  }

  bool crosses_class(int u, int v, int color) const {
    const Point& a = config_.point(u);
    const Point& b = config_.point(v);
    for (int part : members_[static_cast<std::size_t>(color)]) {
      const auto& vs = d_.parts[static_cast<std::size_t>(part)].vertices;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          if (proper_cross(a, b, config_.point(vs[i]), config_.point(vs[j]))) return true;
        }
      }
    }
    return false;
  }

  void first_fit_leftovers(int span) {
    const int first_color_count = std::max(span, colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end()) + 1);
    members_.assign(static_cast<std::size_t>(first_color_count), {});
    vertex_color_.assign(static_cast<std::size_t>(first_color_count), std::vector<char>(static_cast<std::size_t>(n_), 0));
    for (std::size_t p = 0; p < d_.parts.size(); ++p) {
      const int c = colors_[p];
      members_[static_cast<std::size_t>(c)].push_back(static_cast<int>(p));
      for (int v : d_.parts[p].vertices) vertex_color_[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] = 1;
    }
    for (int u = 0; u < n_; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if (used(u, v)) continue;
        used(u, v) = 1;
        int color = 0;
        const int classes = static_cast<int>(members_.size());
        for (; color < classes; ++color) {
          const auto& vc = vertex_color_[static_cast<std::size_t>(color)];
          if (vc[static_cast<std::size_t>(u)] || vc[static_cast<std::size_t>(v)]) continue;
          if (!crosses_class(u, v, color)) break;
        }
        if (color == classes) {
          members_.emplace_back();
          vertex_color_.emplace_back(static_cast<std::size_t>(n_), 0);
        }
        const int part = static_cast<int>(d_.parts.size());
        d_.parts.push_back({{u, v}, "singleton-edge"});
        colors_.push_back(color);
        members_[static_cast<std::size_t>(color)].push_back(part);
        vertex_color_[static_cast<std::size_t>(color)][static_cast<std::size_t>(u)] = 1;
        vertex_color_[static_cast<std::size_t>(color)][static_cast<std::size_t>(v)] = 1;
      }
    }
  }

  const Configuration& config_;
  int threshold_;
  int n_;
  std::vector<char> used_;
  Decomposition d_;
  std::vector<int> colors_;
  Thm5Stats stats_;
  std::vector<std::vector<int>> members_;
  std::vector<std::vector<char>> vertex_color_;
};

}  // namespace

Thm5Result thm5_construction(const Configuration& config, int threshold) {
  if (config.is_convex()) throw std::invalid_argument("thm5 needs a coordinates configuration");
  if (config.size() < 2) throw std::invalid_argument("thm5 needs n >= 2");
  if (threshold < 18) throw std::invalid_argument("thm5 threshold must be at least 18");
  return Thm5Builder(config, threshold).run();
}

Thm32Layout thm32_layout(int k) {
  Thm32Layout layout;
  layout.table = difference_triples(k);
  const int n = layout.table.n;
  const auto config = Configuration::convex(n);
  const int boxes = k / 2 + 1;
  layout.box_triples.assign(static_cast<std::size_t>(boxes), {});
  for (const auto& row : layout.table.rows) {
    for (const auto& t : row.triples) layout.box_triples[static_cast<std::size_t>(row.box - 1)].push_back(t);
  }
  for (const auto& triples : layout.box_triples) {
    // Backtracking over rotation offsets; the first representative stays put.
    std::vector<std::vector<int>> chosen;
    std::vector<int> offsets;
    auto place = [&](auto&& self, std::size_t i) -> bool {
      if (i == triples.size()) return true;
      const int limit = i == 0 ? 1 : n;
      for (int o = 0; o < limit; ++o) {
        const auto& t = triples[i];
        auto tri = sorted3(o % n, (o + t.d1) % n, (o + t.d1 + t.d2) % n);
        bool ok = true;
        for (const auto& other : chosen) {
          if (parts_conflict(config, tri, other)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        chosen.push_back(tri);
        offsets.push_back(o);
        if (self(self, i + 1)) return true;
        chosen.pop_back();
        offsets.pop_back();
      }
      return false;
    };
    if (!place(place, 0)) {
      throw SearchExhausted("thm32: no non-conflicting representatives for a box of " +
                            std::to_string(triples.size()) + " triples, k=" + std::to_string(k));
    }
    layout.box_offsets.push_back(offsets);
  }
  return layout;
}

Decomposition thm32_construction(int k) {
  const auto layout = thm32_layout(k);
  const int n = layout.table.n;
  Decomposition d;
  d.config = Configuration::convex(n);
  std::vector<int> colors;
  for (std::size_t t = 0; t < layout.box_triples.size(); ++t) {
    for (std::size_t i = 0; i < layout.box_triples[t].size(); ++i) {
      const auto& tr = layout.box_triples[t][i];
      const int o = layout.box_offsets[t][i];
      for (int r = 0; r < n; ++r) {
        d.parts.push_back({sorted3(r, (r + tr.d1) % n, (r + tr.d1 + tr.d2) % n), "triangle"});
        const int s = ((r - o) % n + n) % n;
        colors.push_back(s + n * static_cast<int>(t));
      }
    }
  }
  d.coloring = make_coloring(std::move(colors));
  canonicalize(d);
  d.metadata["construction"] = "thm32";
  d.metadata["k"] = k;
  d.metadata["n"] = n;
  d.metadata["colors"] = d.coloring->palette;
  nlohmann::json boxes = nlohmann::json::array();
  for (std::size_t t = 0; t < layout.box_triples.size(); ++t) {
    nlohmann::json box = nlohmann::json::array();
    for (std::size_t i = 0; i < layout.box_triples[t].size(); ++i) {
      const auto& tr = layout.box_triples[t][i];
      box.push_back({{"triple", {tr.d1, tr.d2, tr.d3}}, {"offset", layout.box_offsets[t][i]}});
    }
    boxes.push_back(box);
  }
  d.metadata["boxes"] = boxes;
  return d;
}

std::vector<int> color_class(const Decomposition& d, int color) {
  std::vector<int> out;
  if (!d.coloring) return out;
  for (std::size_t i = 0; i < d.coloring->colors.size(); ++i) {
    if (d.coloring->colors[i] == color) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace geochroma
