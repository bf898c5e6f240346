// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
// Tolerances and time limits are pinned in src/experiments.cpp.
#include <cstdio>
#include <string>

#include "geochroma/experiments.hpp"

int main(int argc, char** argv) {
  int failed = 0;
  for (const auto& name : geochroma::suite_names()) {
    if (argc > 1 && name != argv[1]) continue;
    const auto r = geochroma::run_suite(name);
    std::printf("[%s] criterion %d %s (%.2f s / %.0f s): %s\n", r.pass ? "PASS" : "FAIL", r.criterion,
                r.suite.c_str(), r.seconds, r.time_limit, r.summary.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
