#include "geochroma/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <vector>

namespace geochroma {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Distinct hues by golden-angle stepping.
std::string color_of(int c) {
  if (c < 0) return "#444444";
  const double hue = std::fmod(c * 137.508, 360.0);
  char buf[48];
  std::snprintf(buf, sizeof buf, "hsl(%.1f,70%%,45%%)", hue);
  return buf;
}

}  // namespace

std::string render_svg(const Decomposition& d, const RenderOptions& options) {
  const int n = d.config.size();
  const double size = options.size;
  const double margin = 30;
  std::vector<std::pair<double, double>> pos(static_cast<std::size_t>(n));
  if (d.config.is_convex()) {
    const double r = size / 2 - margin;
    for (int i = 0; i < n; ++i) {
      // Clockwise from the top.
      const double a = -std::numbers::pi / 2 + 2 * std::numbers::pi * i / n;
      pos[i] = {size / 2 + r * std::cos(a), size / 2 + r * std::sin(a)};
    }
  } else if (n > 0) {
    Coord minx = d.config.point(0).x, maxx = minx, miny = d.config.point(0).y, maxy = miny;
    for (const auto& p : d.config.points()) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
    const double span = static_cast<double>(std::max<Coord>({maxx - minx, maxy - miny, 1}));
    const double scale = (size - 2 * margin) / span;
    for (int i = 0; i < n; ++i) {
      const auto& p = d.config.point(i);
      // y grows upward in the plane, downward in SVG.
      pos[i] = {margin + (p.x - minx) * scale, size - margin - (p.y - miny) * scale};
    }
  }

  std::set<int> shown;
  for (int i : d.distinguished) shown.insert(i);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size) + "\" height=\"" + fmt(size + 30) +
         "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size + 30) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  std::set<int> palette;
  int drawn = 0;
  for (std::size_t p = 0; p < d.parts.size(); ++p) {
    const int color = d.coloring ? d.coloring->colors[p] : -1;
    if (options.only_color && color != *options.only_color) continue;
    if (options.distinguished_only && !shown.contains(static_cast<int>(p))) continue;
    palette.insert(color);
    ++drawn;
    const auto& v = d.parts[p].vertices;
    out += "<g stroke=\"" + color_of(color) + "\" stroke-width=\"1.5\" fill=\"none\">";
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        out += "<line x1=\"" + fmt(pos[v[i]].first) + "\" y1=\"" + fmt(pos[v[i]].second) + "\" x2=\"" +
               fmt(pos[v[j]].first) + "\" y2=\"" + fmt(pos[v[j]].second) + "\"/>";
      }
    }
    out += "</g>\n";
  }
  for (int i = 0; i < n; ++i) {
    out += "<circle cx=\"" + fmt(pos[i].first) + "\" cy=\"" + fmt(pos[i].second) + "\" r=\"3\" fill=\"black\"/>\n";
  }
  out += "<text x=\"10\" y=\"" + fmt(size + 20) + "\" font-family=\"monospace\" font-size=\"14\">parts " +
         std::to_string(drawn) + ", palette " + std::to_string(d.coloring ? static_cast<int>(palette.size()) : 0) +
         "</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace geochroma
