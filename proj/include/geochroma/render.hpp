#pragma once

#include <optional>
#include <string>

#include "geochroma/decomposition.hpp"

namespace geochroma {

struct RenderOptions {
  int size = 800;
  /// Draw only the parts of this color.
  std::optional<int> only_color;
  /// Draw only the distinguished parts.
  bool distinguished_only = false;
};

/// Deterministic SVG drawing. Convex configurations are placed on a regular
/// polygon (display only); parts are drawn as their edges, colored by class.
std::string render_svg(const Decomposition& d, const RenderOptions& options = {});

}  // namespace geochroma
