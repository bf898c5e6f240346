#include "geochroma/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace geochroma {

Coloring make_coloring(std::vector<int> colors) {
  std::set<int> distinct(colors.begin(), colors.end());
  Coloring c;
  c.palette = static_cast<int>(distinct.size());
  c.colors = std::move(colors);
  return c;
}

CoverReport validate_decomposition(const Decomposition& d) {
  const int n = d.config.size();
  const auto nn = static_cast<std::size_t>(n);
  std::vector<int> count(nn * nn, 0);
  CoverReport report;
  for (std::size_t p = 0; p < d.parts.size(); ++p) {
    const auto& v = d.parts[p].vertices;
    bool ok = v.size() >= 2 && std::is_sorted(v.begin(), v.end()) &&
              std::adjacent_find(v.begin(), v.end()) == v.end() && v.front() >= 0 && v.back() < n;
    if (!ok) {
      report.malformed.push_back(static_cast<int>(p));
      continue;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        ++count[static_cast<std::size_t>(v[i]) * nn + static_cast<std::size_t>(v[j])];
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int c = count[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)];
      if (c == 0) report.uncovered.push_back({u, v});
      if (c > 1) report.repeated.push_back({u, v});
    }
  }
  return report;
}

std::vector<int> canonicalize(Decomposition& d) {
  std::vector<int> order(d.parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d.parts[a].vertices < d.parts[b].vertices; });
  std::vector<int> new_index(d.parts.size());
  std::vector<Part> parts;
  parts.reserve(d.parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_index[order[i]] = static_cast<int>(i);
    parts.push_back(std::move(d.parts[order[i]]));
  }
  d.parts = std::move(parts);
  if (d.coloring) {
    std::vector<int> colors(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) colors[i] = d.coloring->colors[order[i]];
    d.coloring->colors = std::move(colors);
  }
  for (int& idx : d.distinguished) idx = new_index[idx];
  return order;
}

Decomposition trivial_edge_decomposition(const Configuration& config) {
  if (config.size() < 2) throw std::invalid_argument("trivial_edge_decomposition needs n >= 2");
  Decomposition d;
  d.config = config;
  add_singleton_edges(d);
  d.metadata["construction"] = "edges";
  d.metadata["n"] = config.size();
  return d;
}

void add_singleton_edges(Decomposition& d, const std::string& tag) {
  const int n = d.config.size();
  const auto nn = static_cast<std::size_t>(n);
  std::vector<char> used(nn * nn, 0);
  for (const auto& p : d.parts) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
        used[static_cast<std::size_t>(p.vertices[i]) * nn + static_cast<std::size_t>(p.vertices[j])] = 1;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!used[static_cast<std::size_t>(u) * nn + static_cast<std::size_t>(v)]) d.parts.push_back({{u, v}, tag});
    }
  }
}

}  // namespace geochroma
