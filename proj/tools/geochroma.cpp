// geochroma command line: generate configurations, build and color
// decompositions, verify, render and run the acceptance suites.
#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "geochroma/chroma.hpp"
#include "geochroma/constructions.hpp"
#include "geochroma/errors.hpp"
#include "geochroma/experiments.hpp"
#include "geochroma/io.hpp"
#include "geochroma/render.hpp"

namespace {

using nlohmann::json;
using namespace geochroma;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int q = 0;
  int k = 0;
  std::uint64_t seed = 1;
  std::string mode = "greedy";
  std::int64_t budget = 20'000'000;
  std::string out;
  bool convex = false;
  Coord bound = kDefaultBound;
  int threshold = kThm5Threshold;
  std::optional<int> color;
  bool distinguished = false;
  double c = 0;
  std::string input;
  std::string construction;
  std::string suite;
};

// Writes text to --out (plus a manifest next to it) or to stdout.
void emit(const Options& o, const std::string& command, const json& params, const std::string& text,
          std::chrono::steady_clock::time_point t0) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  write_text_file(o.out, text);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json manifest = {{"command", command},
                   {"parameters", params},
                   {"seed", o.seed},
                   {"version", kVersion},
                   {"seconds", secs},
                   {"outputs", {{o.out, sha256_hex(text)}}}};
  write_text_file(o.out + ".manifest.json", dump(manifest));
}

int cmd_gen(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  if (o.n < 1) throw UsageError("-n is required");
  const auto config = o.convex ? convex_configuration(o.n) : generate_general_position(o.n, o.bound, o.seed);
  const json params = {{"n", o.n}, {"convex", o.convex}, {"bound", o.bound}};
  emit(o, "gen", params, dump(config), t0);
  return kExitOk;
}

int cmd_build(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Decomposition d;
  json params = {{"construction", o.construction}};
  if (o.construction == "edges") {
    Configuration config;
    if (!o.input.empty()) {
      config = read_configuration(o.input);
      params["config"] = o.input;
    } else {
      if (o.n < 1) throw UsageError("edges needs -n or --config");
      config = o.convex ? convex_configuration(o.n) : generate_general_position(o.n, o.bound, o.seed);
      params["n"] = o.n;
      params["convex"] = o.convex;
    }
    d = trivial_edge_decomposition(config);
  } else if (o.construction == "thm3") {
    int q = o.q;
    if (q == 0 && o.n > 0) q = thm3_order_for(o.n);
    if (q < 3) throw UsageError("thm3 needs -q (prime power >= 3) or -n >= 27");
    const auto config = o.input.empty() ? thm3_configuration(q, o.seed, o.bound) : read_configuration(o.input);
    d = thm3_construction(q, config).decomposition;
    params["q"] = q;
  } else if (o.construction == "thm4") {
    if (o.n < 3) throw UsageError("thm4 needs -n divisible by 3");
    d = thm4_construction(o.n);
    params["n"] = o.n;
  } else if (o.construction == "thm5") {
    Configuration config;
    if (!o.input.empty()) {
      config = read_configuration(o.input);
    } else {
      if (o.n < 1) throw UsageError("thm5 needs -n or --config");
      config = generate_general_position(o.n, o.bound, o.seed);
    }
    d = thm5_construction(config, o.threshold).decomposition;
    params["n"] = config.size();
    params["threshold"] = o.threshold;
  } else if (o.construction == "thm32") {
    if (o.k < 4) throw UsageError("thm32 needs even -k >= 4");
    d = thm32_construction(o.k);
    params["k"] = o.k;
  } else {
    throw UsageError("unknown construction '" + o.construction + "'");
  }
  params["bound"] = o.bound;
  emit(o, "build", params, dump(d), t0);
  return kExitOk;
}

int cmd_color(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  auto d = read_decomposition(o.input);
  const auto g = conflict_graph(d);
  json info = {{"mode", o.mode}};
  if (o.mode == "greedy") {
    d.coloring = greedy_color(g);
  } else if (o.mode == "exact") {
    const auto r = exact_chromatic_index(g, o.budget);
    d.coloring = r.best;
    info["lower"] = r.lower;
    info["upper"] = r.upper;
    info["exact"] = r.exact;
    info["nodes"] = r.nodes;
    std::cerr << "chromatic index " << (r.exact ? "= " + std::to_string(r.upper)
                                                : "in [" + std::to_string(r.lower) + ", " +
                                                      std::to_string(r.upper) + "]")
              << "\n";
  } else {
    throw UsageError("--mode must be greedy or exact");
  }
  info["palette"] = d.coloring->palette;
  d.metadata["coloring"] = info;
  emit(o, "color", {{"input", o.input}, {"mode", o.mode}, {"budget", o.budget}}, dump(d), t0);
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = read_decomposition(o.input);
  const auto cover = validate_decomposition(d);
  json report = {{"parts", d.parts.size()},
                 {"uncovered", cover.uncovered.size()},
                 {"repeated", cover.repeated.size()},
                 {"malformed", cover.malformed.size()},
                 {"exact_cover", cover.valid()}};
  bool ok = cover.valid();
  if (d.coloring) {
    const auto bad = verify_coloring(d, *d.coloring);
    report["palette"] = d.coloring->palette;
    report["violations"] = bad.size();
    json sample = json::array();
    for (std::size_t i = 0; i < bad.size() && i < 10; ++i) sample.push_back({bad[i].first, bad[i].second});
    report["violation_sample"] = sample;
    ok = ok && bad.empty();
  }
  report["pass"] = ok;
  emit(o, "verify", {{"input", o.input}}, dump(report), t0);
  return ok ? kExitOk : kExitInvalid;
}

int cmd_stats(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = read_decomposition(o.input);
  const int n = d.config.size();
  std::map<int, int> sizes;
  std::map<std::string, int> tags;
  for (const auto& p : d.parts) {
    ++sizes[static_cast<int>(p.vertices.size())];
    ++tags[p.tag];
  }
  json by_size = json::object();
  for (const auto& [s, c] : sizes) by_size[std::to_string(s)] = c;
  json report = {{"n", n},
                 {"mode", d.config.is_convex() ? "convex" : "coordinates"},
                 {"parts", d.parts.size()},
                 {"parts_by_size", by_size},
                 {"parts_by_tag", tags},
                 {"distinguished", d.distinguished.size()},
                 {"metadata", d.metadata}};
  bool ok = true;
  if (d.coloring && n > 0) {
    const int palette = d.coloring->palette;
    const double n15 = std::pow(n, 1.5);
    const double bound = n * static_cast<double>(n) / 9.0 + o.c * n15;
    report["palette"] = palette;
    report["implied_C"] = (palette - n * static_cast<double>(n) / 9.0) / n15;
    report["bound_C"] = o.c;
    report["bound"] = bound;
    report["within_bound"] = palette <= bound;
    if (d.metadata.value("construction", "") == "thm5") ok = palette <= bound;
    if (d.config.is_convex()) {
      bool triangles_only = true;
      for (const auto& p : d.parts) triangles_only = triangles_only && (p.vertices.size() == 3 || p.vertices.size() == 2);
      if (triangles_only) report["census"] = triangle_census(d, *d.coloring, census_threshold());
    }
  }
  emit(o, "stats", {{"input", o.input}, {"c", o.c}}, dump(report), t0);
  return ok ? kExitOk : kExitInvalid;
}

int cmd_render(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = read_decomposition(o.input);
  RenderOptions ro;
  ro.only_color = o.color;
  ro.distinguished_only = o.distinguished;
  json params = {{"input", o.input}, {"distinguished", o.distinguished}};
  if (o.color) params["color"] = *o.color;
  emit(o, "render", params, render_svg(d, ro), t0);
  return kExitOk;
}

int cmd_experiment(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suite_names();
  } else {
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == o.suite;
    if (!known) throw UsageError("unknown suite '" + o.suite + "'");
    names = {o.suite};
  }
  json reports = json::array();
  bool all = true;
  for (const auto& name : names) {
    const auto r = run_suite(name);
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.suite << " (" << r.seconds << " s): " << r.summary << "\n";
    reports.push_back(report_json(r));
    all = all && r.pass;
  }
  const json out = {{"suite", o.suite}, {"pass", all}, {"reports", reports}};
  emit(o, "experiment", {{"suite", o.suite}}, dump(out), t0);
  return all ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic index experiments on complete geometric graphs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a configuration");
  gen->add_option("-n", o.n, "Vertex count")->required();
  gen->add_flag("--convex", o.convex, "Convex position (cyclic order only)");
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--bound", o.bound, "Coordinate bound");
  gen->add_option("--out", o.out, "Output file (default stdout)");

  auto* build = app.add_subcommand("build", "Build a decomposition");
  build->add_option("construction", o.construction, "edges, thm3, thm4, thm5 or thm32")
      ->required()
      ->check(CLI::IsMember({"edges", "thm3", "thm4", "thm5", "thm32"}));
  build->add_option("-n", o.n, "Vertex count");
  build->add_option("-q", o.q, "Prime power for thm3");
  build->add_option("-k", o.k, "Even k for thm32");
  build->add_option("--seed", o.seed, "Random seed");
  build->add_option("--bound", o.bound, "Coordinate bound");
  build->add_option("--threshold", o.threshold, "thm5 recursion threshold");
  build->add_option("--config", o.input, "Configuration file instead of generating one");
  build->add_flag("--convex", o.convex, "Convex configuration (edges)");
  build->add_option("--out", o.out, "Output file (default stdout)");

  auto* color = app.add_subcommand("color", "Color a decomposition");
  color->add_option("file", o.input, "Decomposition file")->required();
  color->add_option("--mode", o.mode, "greedy or exact")->check(CLI::IsMember({"greedy", "exact"}));
  color->add_option("--budget", o.budget, "Search node budget for exact mode");
  color->add_option("--out", o.out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check exact cover and coloring");
  verify->add_option("file", o.input, "Decomposition file")->required();
  verify->add_option("--out", o.out, "Report file (default stdout)");

  auto* stats = app.add_subcommand("stats", "Summarize a decomposition");
  stats->add_option("file", o.input, "Decomposition file")->required();
  stats->add_option("--c", o.c, "C in the palette bound n^2/9 + C n^1.5");
  stats->add_option("--out", o.out, "Report file (default stdout)");

  auto* render = app.add_subcommand("render", "Render a decomposition as SVG");
  render->add_option("file", o.input, "Decomposition file")->required();
  render->add_option("--color", o.color, "Draw only this color class");
  render->add_flag("--distinguished", o.distinguished, "Draw only the distinguished parts");
  render->add_option("--out", o.out, "SVG file (default stdout)");

  auto* experiment = app.add_subcommand("experiment", "Run an acceptance suite");
  experiment->add_option("suite", o.suite, "Suite name or 'all'")->required();
  experiment->add_option("--out", o.out, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*build) return cmd_build(o);
    if (*color) return cmd_color(o);
    if (*verify) return cmd_verify(o);
    if (*stats) return cmd_stats(o);
    if (*render) return cmd_render(o);
    if (*experiment) return cmd_experiment(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}
