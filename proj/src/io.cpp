#include "geochroma/io.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

namespace geochroma {

using nlohmann::json;

void to_json(json& j, const Point& p) { j = json::array({p.x, p.y}); }

void to_json(json& j, const Configuration& c) {
  j = json::object();
  j["mode"] = c.is_convex() ? "convex" : "coordinates";
  j["n"] = c.size();
  if (!c.is_convex()) j["points"] = c.points();
}

void from_json(const json& j, Configuration& c) {
  try {
    const auto mode = j.at("mode").get<std::string>();
    const int n = j.at("n").get<int>();
    if (mode == "convex") {
      if (j.contains("points")) throw SchemaError("convex configuration must not list points");
      c = Configuration::convex(n);
    } else if (mode == "coordinates") {
      std::vector<Point> pts;
      for (const auto& p : j.at("points")) {
        if (!p.is_array() || p.size() != 2) throw SchemaError("point must be [x, y]");
        pts.push_back({p[0].get<Coord>(), p[1].get<Coord>()});
      }
      if (static_cast<int>(pts.size()) != n) throw SchemaError("point count does not match n");
      c = Configuration::from_points(std::move(pts));
    } else {
      throw SchemaError("unknown configuration mode '" + mode + "'");
    }
  } catch (const json::exception& e) {
    throw SchemaError(std::string("configuration: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("configuration: ") + e.what());
  }
}

void to_json(json& j, const CutLine& l) { j = json::array({l.a, l.b, l.c}); }

void to_json(json& j, const RegionAssignment& r) {
  j = json::object();
  j["regions"] = r.regions;
  j["spill"] = r.spill;
  j["cuts"] = r.cuts;
  json patterns = json::array();
  for (const auto& p : r.patterns) {
    json row = json::array();
    for (const auto& s : p) row.push_back({s.cut, s.side});
    patterns.push_back(row);
  }
  j["patterns"] = patterns;
  if (!r.strip_of_region.empty()) j["strip_of_region"] = r.strip_of_region;
  if (r.center) j["center"] = {r.center->x, r.center->y, r.center->w};
}

void to_json(json& j, const BlockDesign& d) { j = {{"n", d.n}, {"blocks", d.blocks}}; }

void from_json(const json& j, BlockDesign& d) {
  try {
    d.n = j.at("n").get<int>();
    d.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
    d.block_size = d.blocks.empty() ? 0 : static_cast<int>(d.blocks.front().size());
  } catch (const json::exception& e) {
    throw SchemaError(std::string("block design: ") + e.what());
  }
}

void to_json(json& j, const DifferenceTripleTable& t) {
  j = {{"k", t.k}, {"n", t.n}};
  json rows = json::array();
  for (const auto& r : t.rows) {
    json triples = json::array();
    for (const auto& x : r.triples) triples.push_back({x.d1, x.d2, x.d3});
    rows.push_back({{"row", r.row}, {"triples", triples}, {"box", r.box}});
  }
  j["rows"] = rows;
}

void to_json(json& j, const Decomposition& d) {
  j = json::object();
  j["config"] = d.config;
  json parts = json::array();
  for (const auto& p : d.parts) parts.push_back({{"vertices", p.vertices}, {"tag", p.tag}});
  j["parts"] = parts;
  if (d.coloring) j["coloring"] = d.coloring->colors;
  if (!d.distinguished.empty()) j["distinguished"] = d.distinguished;
  j["metadata"] = d.metadata;
}

void from_json(const json& j, Decomposition& d) {
  try {
    d.config = j.at("config").get<Configuration>();
    d.parts.clear();
    for (const auto& p : j.at("parts")) {
      Part part;
      part.vertices = p.at("vertices").get<std::vector<int>>();
      part.tag = p.value("tag", "");
      d.parts.push_back(std::move(part));
    }
    d.coloring.reset();
    if (j.contains("coloring")) {
      auto colors = j.at("coloring").get<std::vector<int>>();
      if (colors.size() != d.parts.size()) throw SchemaError("coloring length does not match part count");
      d.coloring = make_coloring(std::move(colors));
    }
    d.distinguished = j.value("distinguished", std::vector<int>{});
    for (int i : d.distinguished) {
      if (i < 0 || i >= static_cast<int>(d.parts.size())) throw SchemaError("distinguished index out of range");
    }
    d.metadata = j.value("metadata", json::object());
  } catch (const json::exception& e) {
    throw SchemaError(std::string("decomposition: ") + e.what());
  }
}

void to_json(json& j, const TriangleCensus& c) {
  j = json::object();
  j["x"] = c.x.str();
  j["x_approx"] = c.x.to_double();
  j["class_limit"] = c.class_limit;
  j["max_class_large"] = c.max_class_large;
  j["large_triangles"] = std::count(c.large.begin(), c.large.end(), true);
  j["classes_with_large"] = c.per_class_large.size();
  j["violating_classes"] = c.violating_classes;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Decomposition read_decomposition(const std::string& path) { return read_json_file(path).get<Decomposition>(); }

Configuration read_configuration(const std::string& path) { return read_json_file(path).get<Configuration>(); }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx, bytes.data(), bytes.size());
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

}  // namespace geochroma
