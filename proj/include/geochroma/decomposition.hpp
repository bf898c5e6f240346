// Edge decompositions of complete geometric graphs and their colorings.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "geochroma/exactgeom.hpp"

namespace geochroma {

/// A vertex subset of size >= 2 standing for the complete subgraph it induces.
struct Part {
  std::vector<int> vertices;  // sorted
  std::string tag;

  friend bool operator==(const Part&, const Part&) = default;
};

/// colors[i] is the color of part i; palette is the number of distinct
/// colors actually used.
struct Coloring {
  std::vector<int> colors;
  int palette = 0;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

Coloring make_coloring(std::vector<int> colors);

struct Decomposition {
  Configuration config;
  std::vector<Part> parts;
  std::optional<Coloring> coloring;
  /// Indices of parts forming the construction's distinguished family.
  std::vector<int> distinguished;
  nlohmann::json metadata = nlohmann::json::object();

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct CoverReport {
  std::vector<Edge> uncovered;
  /// Edges lying in two or more parts.
  std::vector<Edge> repeated;
  /// Parts with fewer than two vertices, unsorted, repeated or out-of-range
  /// vertices.
  std::vector<int> malformed;

  bool valid() const { return uncovered.empty() && repeated.empty() && malformed.empty(); }
};

CoverReport validate_decomposition(const Decomposition& d);

/// Sorts parts lexicographically by vertex list, carrying colors and the
/// distinguished indices along. Returns the old index of each new position.
std::vector<int> canonicalize(Decomposition& d);

Decomposition trivial_edge_decomposition(const Configuration& config);

/// Adds a singleton-edge part for every edge not yet covered.
void add_singleton_edges(Decomposition& d, const std::string& tag = "singleton-edge");

}  // namespace geochroma
