#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetaglue/numeric.hpp"

namespace zg {

/// Everything a single invocation needs.  Mirrored one to one by the --config JSON file.
struct RunConfig {
  std::string command;  // det | dn-spec | glue | zeta | oracle-compare
  std::string cross_section = "point";
  double L = 1.0;
  std::optional<double> a;
  double alpha = 0.0;
  std::string bc = "dd";
  std::string geometry = "both_ends";  // interface geometry for dn-spec, or rs0
  double s = 0.0;
  bool include_zero = false;
  double cutoff = 100.0;  // eigenvalue cutoff for listed interface spectra
  int n = 4096;           // oracle eigenvalue count
  std::string reference = "dd";
  std::string backend = "auto";
  std::string format = "json";
  NumericOptions numeric;
};

struct RunOutput {
  int exit_code = 0;
  std::string out;  // the report
  std::string err;  // diagnostics
};

/// Exit codes: 0 success, 2 validation, 3 non-convergence or short spectrum, 4 inadmissible parameter.
RunOutput run(const RunConfig& cfg);

/// Unknown keys and wrong types are validation errors.
RunConfig config_from_json(const nlohmann::ordered_json& j, RunConfig base = {});
nlohmann::ordered_json config_to_json(const RunConfig& cfg);

/// Parses argv (without the program name) and runs.
RunOutput run_args(const std::vector<std::string>& args);

int cli_main(int argc, char** argv);

}  // namespace zg
