#include "geochroma/chroma.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace geochroma {

ConflictGraph::ConflictGraph(int m) : m_(m), adj_(static_cast<std::size_t>(m)) {
  if (m < 0) throw std::invalid_argument("negative graph size");
}

void ConflictGraph::add_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("conflict graphs are irreflexive");
  adj_[static_cast<std::size_t>(a)].push_back(b);
  adj_[static_cast<std::size_t>(b)].push_back(a);
}

void ConflictGraph::finalize() {
  for (auto& l : adj_) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
}

bool ConflictGraph::adjacent(int a, int b) const {
  const auto& l = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(l.begin(), l.end(), b);
}

std::int64_t ConflictGraph::edge_count() const {
  std::int64_t s = 0;
  for (const auto& l : adj_) s += static_cast<std::int64_t>(l.size());
  return s / 2;
}

int worker_count() {
  if (const char* env = std::getenv("GEOCHROMA_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ConflictGraph conflict_graph(const Decomposition& d) { return conflict_graph(d.config, d.parts); }

ConflictGraph conflict_graph(const Configuration& config, std::span<const Part> parts) {
  const int m = static_cast<int>(parts.size());
  const int workers = std::max(1, std::min(worker_count(), m));
  // Row i holds neighbors j > i; rows are dealt round-robin so the result
  // does not depend on the schedule.
  std::vector<std::vector<int>> forward(static_cast<std::size_t>(m));
  auto work = [&](int w) {
    for (int i = w; i < m; i += workers) {
      for (int j = i + 1; j < m; ++j) {
        if (parts_conflict(config, parts[i].vertices, parts[j].vertices)) forward[i].push_back(j);
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  ConflictGraph g(m);
  for (int i = 0; i < m; ++i) {
    for (int j : forward[i]) g.add_edge(i, j);
  }
  g.finalize();
  return g;
}

std::vector<std::pair<int, int>> verify_coloring(const Decomposition& d, const Coloring& c) {
  if (c.colors.size() != d.parts.size()) throw std::invalid_argument("coloring does not cover every part");
  std::map<int, std::vector<int>> classes;
  for (std::size_t i = 0; i < c.colors.size(); ++i) classes[c.colors[i]].push_back(static_cast<int>(i));
  std::vector<std::pair<int, int>> bad;
  for (const auto& [color, members] : classes) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (parts_conflict(d.config, d.parts[members[i]].vertices, d.parts[members[j]].vertices)) {
          bad.emplace_back(members[i], members[j]);
        }
      }
    }
  }
  std::sort(bad.begin(), bad.end());
  return bad;
}

std::vector<std::pair<int, int>> verify_coloring(const ConflictGraph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.size()) throw std::invalid_argument("coloring does not cover every part");
  std::vector<std::pair<int, int>> bad;
  for (int v = 0; v < g.size(); ++v) {
    for (int w : g.neighbors(v)) {
      if (w > v && c.colors[v] == c.colors[w]) bad.emplace_back(v, w);
    }
  }
  return bad;
}

Coloring greedy_color(const ConflictGraph& g) {
  const int m = g.size();
  std::vector<int> color(static_cast<std::size_t>(m), -1);
  std::vector<std::unordered_set<int>> seen(static_cast<std::size_t>(m));
  for (int step = 0; step < m; ++step) {
    int pick = -1;
    for (int v = 0; v < m; ++v) {
      if (color[v] >= 0) continue;
      if (pick < 0) {
        pick = v;
        continue;
      }
      const auto sv = seen[v].size(), sp = seen[pick].size();
      if (sv > sp || (sv == sp && g.neighbors(v).size() > g.neighbors(pick).size())) pick = v;
    }
    int c = 0;
    while (seen[pick].contains(c)) ++c;
    color[pick] = c;
    for (int w : g.neighbors(pick)) seen[w].insert(c);
  }
  return make_coloring(std::move(color));
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitGraph {
  int m = 0;
  std::size_t words = 0;
  std::vector<Bits> rows;

  explicit BitGraph(const ConflictGraph& g) : m(g.size()), words((static_cast<std::size_t>(g.size()) + 63) / 64) {
    rows.assign(static_cast<std::size_t>(m), Bits(words, 0));
    for (int v = 0; v < m; ++v) {
      for (int w : g.neighbors(v)) rows[v][static_cast<std::size_t>(w) / 64] |= std::uint64_t{1} << (w % 64);
    }
  }
};

int popcount(const Bits& b) {
  int c = 0;
  for (auto w : b) c += __builtin_popcountll(w);
  return c;
}

bool any(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

class CliqueSearch {
 public:
  CliqueSearch(const ConflictGraph& g, std::int64_t budget) : bg_(g), budget_(budget) {}

  CliqueResult run(std::vector<int> seed) {
    best_ = std::move(seed);
    Bits p(bg_.words, 0), x(bg_.words, 0);
    for (int v = 0; v < bg_.m; ++v) p[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<int> r;
    expand(r, p, x);
    CliqueResult out;
    out.clique = best_;
    std::sort(out.clique.begin(), out.clique.end());
    out.exact = !stopped_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void expand(std::vector<int>& r, Bits& p, Bits& x) {
    if (stopped_) return;
    if (++nodes_ > budget_) {
      stopped_ = true;
      return;
    }
    if (!any(p)) {
      if (r.size() > best_.size()) best_ = r;
      return;
    }
    if (static_cast<int>(r.size()) + popcount(p) <= static_cast<int>(best_.size())) return;
    // Pivot maximizing |P & N(u)| over P | X.
    int pivot = -1, pivot_deg = -1;
    for (std::size_t w = 0; w < bg_.words; ++w) {
      std::uint64_t word = p[w] | x[w];
      while (word) {
        const int u = static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(word)));
        word &= word - 1;
        int deg = 0;
        for (std::size_t k = 0; k < bg_.words; ++k) deg += __builtin_popcountll(p[k] & bg_.rows[u][k]);
        if (deg > pivot_deg) {
          pivot_deg = deg;
          pivot = u;
        }
      }
    }
    Bits cand(bg_.words);
    for (std::size_t k = 0; k < bg_.words; ++k) cand[k] = p[k] & ~bg_.rows[pivot][k];
    for (std::size_t w = 0; w < bg_.words; ++w) {
      while (cand[w]) {
        const int v = static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(cand[w])));
        cand[w] &= cand[w] - 1;
        Bits np(bg_.words), nx(bg_.words);
        for (std::size_t k = 0; k < bg_.words; ++k) {
          np[k] = p[k] & bg_.rows[v][k];
          nx[k] = x[k] & bg_.rows[v][k];
        }
        r.push_back(v);
        expand(r, np, nx);
        r.pop_back();
        if (stopped_) return;
        p[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
        x[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
        if (static_cast<int>(r.size()) + popcount(p) <= static_cast<int>(best_.size())) return;
      }
    }
  }

  BitGraph bg_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  bool stopped_ = false;
  std::vector<int> best_;
};

bool is_clique(const ConflictGraph& g, std::span<const int> c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (!g.adjacent(c[i], c[j])) return false;
    }
  }
  return true;
}

enum class Outcome { feasible, infeasible, budget };

class PaletteSearch {
 public:
  PaletteSearch(const ConflictGraph& g, std::vector<int> clique, std::int64_t& nodes, std::int64_t budget)
      : g_(g), clique_(std::move(clique)), nodes_(nodes), budget_(budget) {}

  Outcome run(int k, std::vector<int>& colors_out) {
    const int m = g_.size();
    k_ = k;
    if (static_cast<int>(clique_.size()) > k) return Outcome::infeasible;
    color_.assign(static_cast<std::size_t>(m), -1);
    forbidden_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(k), 0);
    domain_.assign(static_cast<std::size_t>(m), k);
    // Clique vertices first with fixed distinct colors, then by index.
    order_ = clique_;
    std::vector<char> in_clique(static_cast<std::size_t>(m), 0);
    for (int v : clique_) in_clique[v] = 1;
    for (int v = 0; v < m; ++v) {
      if (!in_clique[v]) order_.push_back(v);
    }
    for (std::size_t i = 0; i < clique_.size(); ++i) {
      if (!assign(clique_[i], static_cast<int>(i))) return Outcome::infeasible;
    }
    const Outcome o = search(clique_.size(), static_cast<int>(clique_.size()));
    if (o == Outcome::feasible) colors_out = color_;
    return o;
  }

 private:
  int& forbid(int v, int c) { return forbidden_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]; }

  // Colors v and propagates; false (with the change undone) if a domain empties.
  bool assign(int v, int c) {
    color_[v] = c;
    bool ok = true;
    for (int w : g_.neighbors(v)) {
      if (color_[w] >= 0) continue;
      if (forbid(w, c)++ == 0 && --domain_[w] == 0) ok = false;
    }
    if (!ok) unassign(v);
    return ok;
  }

  void unassign(int v) {
    const int c = color_[v];
    color_[v] = -1;
    for (int w : g_.neighbors(v)) {
      if (color_[w] >= 0) continue;
      if (--forbid(w, c) == 0) ++domain_[w];
    }
  }

  Outcome search(std::size_t pos, int used) {
    if (pos == order_.size()) return Outcome::feasible;
    if (++nodes_ > budget_) return Outcome::budget;
    const int v = order_[pos];
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (forbid(v, c) > 0) continue;
      if (!assign(v, c)) continue;
      const Outcome o = search(pos + 1, std::max(used, c + 1));
      if (o != Outcome::infeasible) return o;
      unassign(v);
    }
    return Outcome::infeasible;
  }

  const ConflictGraph& g_;
  std::vector<int> clique_;
  std::int64_t& nodes_;
  std::int64_t budget_;
  int k_ = 0;
  std::vector<int> color_;
  std::vector<int> forbidden_;
  std::vector<int> domain_;
  std::vector<int> order_;
};

}  // namespace

CliqueResult clique_index(const ConflictGraph& g, std::int64_t budget, std::span<const int> seed) {
  std::vector<int> start;
  if (!seed.empty() && is_clique(g, seed)) start.assign(seed.begin(), seed.end());
  if (start.empty() && g.size() > 0) start = {0};
  return CliqueSearch(g, budget).run(start);
}

ChromaticResult exact_chromatic_index(const ConflictGraph& g, std::int64_t budget, std::span<const int> seed_clique) {
  ChromaticResult out;
  if (g.size() == 0) {
    out.exact = true;
    return out;
  }
  const auto clique = clique_index(g, budget / 4, seed_clique);
  out.nodes = clique.nodes;
  out.best = greedy_color(g);
  out.lower = static_cast<int>(clique.clique.size());
  out.upper = out.best.palette;
  PaletteSearch search(g, clique.clique, out.nodes, out.nodes + budget);
  while (out.lower < out.upper) {
    std::vector<int> colors;
    const Outcome o = search.run(out.lower, colors);
    if (o == Outcome::feasible) {
      out.best = make_coloring(std::move(colors));
      out.upper = out.lower;
    } else if (o == Outcome::infeasible) {
      ++out.lower;
    } else {
      break;
    }
  }
  out.exact = out.lower == out.upper;
  return out;
}

int brute_force_chromatic_index(const ConflictGraph& g) {
  const int m = g.size();
  if (m == 0) return 0;
  std::vector<int> color(static_cast<std::size_t>(m), -1);
  for (int k = 1; k <= m; ++k) {
    auto bt = [&](auto&& self, int i, int used) -> bool {
      if (i == m) return true;
      for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
          if (color[j] == c && g.adjacent(i, j)) ok = false;
        }
        if (!ok) continue;
        color[i] = c;
        if (self(self, i + 1, std::max(used, c + 1))) return true;
      }
      color[i] = -1;
      return false;
    };
    if (bt(bt, 0, 0)) return k;
  }
  return m;
}

int triangle_length(int n, std::span<const int> tri) {
  if (tri.size() != 3) throw std::invalid_argument("triangle_length needs three vertices");
  int best = n;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const int d = std::abs(tri[i] - tri[j]);
      best = std::min(best, std::min(d, n - d));
    }
  }
  return best;
}

QuadSurd census_threshold() { return QuadSurd(Rational(6), Rational(2), 6); }

TriangleCensus triangle_census(const Decomposition& d, const Coloring& c, const QuadSurd& x) {
  if (!d.config.is_convex()) throw std::invalid_argument("triangle_census needs a convex configuration");
  if (c.colors.size() != d.parts.size()) throw std::invalid_argument("coloring does not cover every part");
  if (x < QuadSurd(Rational(3))) throw std::invalid_argument("triangle_census needs x >= 3");
  const int n = d.config.size();
  TriangleCensus out;
  out.x = x;
  out.class_limit = static_cast<int>((x - QuadSurd(Rational(2))).floor());
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto& v = d.parts[i].vertices;
    if (v.size() == 2) {
      out.lengths.push_back(-1);
      out.large.push_back(false);
      continue;
    }
    if (v.size() != 3) throw std::invalid_argument("triangle_census: part " + std::to_string(i) + " is not a triangle");
    const int len = triangle_length(n, v);
    out.lengths.push_back(len);
    const bool large = QuadSurd(Rational(n)) <= QuadSurd(Rational(len)) * x;
    out.large.push_back(large);
    if (large) ++out.per_class_large[c.colors[i]];
  }
  for (const auto& [color, count] : out.per_class_large) {
    out.max_class_large = std::max(out.max_class_large, count);
    if (count > out.class_limit) out.violating_classes.push_back(color);
  }
  return out;
}

BoundVariant bound_variant_from_string(const std::string& name) {
  for (auto v : {BoundVariant::prop1, BoundVariant::prop2, BoundVariant::thm3, BoundVariant::thm4, BoundVariant::thm32,
                 BoundVariant::thm33, BoundVariant::thm5}) {
    if (to_string(v) == name) return v;
  }
  throw std::invalid_argument("unknown bound variant '" + name + "'");
}

std::string to_string(BoundVariant v) {
  switch (v) {
    case BoundVariant::prop1: return "prop1";
    case BoundVariant::prop2: return "prop2";
    case BoundVariant::thm3: return "thm3";
    case BoundVariant::thm4: return "thm4";
    case BoundVariant::thm32: return "thm32";
    case BoundVariant::thm33: return "thm33";
    case BoundVariant::thm5: return "thm5";
  }
  return "?";
}

QuadSurd evaluate_bound(BoundVariant v, std::int64_t n, Rational c) {
  if (n < 3) throw std::invalid_argument("bounds need n >= 3");
  const Rational pairs(n * (n - 1) / 2);
  const QuadSurd n15(Rational(0), c * Rational(n), n);  // c n sqrt(n)
  switch (v) {
    case BoundVariant::prop1: return QuadSurd(pairs / Rational(3)) + n15;
    case BoundVariant::prop2: return QuadSurd(pairs / Rational(6)) + n15;
    case BoundVariant::thm3: {
      const Rational q(n - 6, 7);
      return QuadSurd(Rational(2) * q * q);
    }
    case BoundVariant::thm4: {
      const Rational t(n, 3);
      return QuadSurd(t * t);
    }
    case BoundVariant::thm32: return QuadSurd(Rational(n) * (Rational(n - 1, 36) + Rational(1)));
    case BoundVariant::thm33: {
      const QuadSurd x = census_threshold();
      const QuadSurd top = QuadSurd(pairs / Rational(3)) - QuadSurd(Rational(n * n)) / x;
      return top / (x - QuadSurd(Rational(2)));
    }
    case BoundVariant::thm5: return QuadSurd(Rational(n * n, 9)) + n15;
  }
  throw std::invalid_argument("unknown bound variant");
}

namespace {

FamilyResult best_compatible(const std::vector<std::vector<int>>& candidates,
                             const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& compatible,
                             std::int64_t budget) {
  const int m = static_cast<int>(candidates.size());
  ConflictGraph g(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (compatible(candidates[i], candidates[j])) g.add_edge(i, j);
    }
  }
  g.finalize();
  FamilyResult out;
  if (m == 0) {
    out.exact = true;
    return out;
  }
  const auto r = clique_index(g, budget);
  for (int i : r.clique) out.family.push_back(candidates[i]);
  std::sort(out.family.begin(), out.family.end());
  out.exact = r.exact;
  out.nodes = r.nodes;
  return out;
}

int shared(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (int x : a) s += static_cast<int>(std::count(b.begin(), b.end(), x));
  return s;
}

}  // namespace

FamilyResult max_intersecting_family(const Configuration& config, int k, std::int64_t budget) {
  if (k != 2 && k != 3) throw std::invalid_argument("max_intersecting_family supports parts of 2 or 3 vertices");
  const int n = config.size();
  std::vector<std::vector<int>> candidates;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (k == 2) {
        candidates.push_back({a, b});
        continue;
      }
      for (int c = b + 1; c < n; ++c) candidates.push_back({a, b, c});
    }
  }
  return best_compatible(
      candidates,
      [&](const std::vector<int>& x, const std::vector<int>& y) {
        return shared(x, y) <= 1 && parts_conflict(config, x, y);
      },
      budget);
}

FamilyResult tau_point(const Configuration& config, const RationalPoint& p, std::int64_t budget) {
  if (config.is_convex()) throw std::invalid_argument("tau_point needs a coordinates configuration");
  if (p.w <= 0) throw std::invalid_argument("rational point needs w > 0");
  const int n = config.size();
  for (int v = 0; v < n; ++v) {
    const Point& q = config.point(v);
    if (static_cast<__int128>(q.x) * p.w == p.x && static_cast<__int128>(q.y) * p.w == p.y) {
      throw std::invalid_argument("tau_point: p coincides with a vertex");
    }
  }
  std::vector<std::vector<int>> candidates;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (in_closed_triangle(p, config.point(a), config.point(b), config.point(c))) candidates.push_back({a, b, c});
      }
    }
  }
  return best_compatible(
      candidates, [](const std::vector<int>& x, const std::vector<int>& y) { return shared(x, y) <= 1; }, budget);
}

}  // namespace geochroma
