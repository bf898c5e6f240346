// Acceptance suites shared by the command line and the acceptance test.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace geochroma {

struct SuiteReport {
  int criterion = 0;
  std::string suite;
  bool pass = false;
  double seconds = 0;
  double time_limit = 0;
  /// One line of the most relevant measured values.
  std::string summary;
  nlohmann::json measured = nlohmann::json::object();
};

/// Suite names in criterion order ("acceptance-sts9", ...).
const std::vector<std::string>& suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name);

nlohmann::json report_json(const SuiteReport& r);

}  // namespace geochroma
