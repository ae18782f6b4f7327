// Batch verification scenarios: which presets, which suites, which parameters.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ihopf/checks.hpp"

namespace ihopf {

struct ScenarioConfig {
  std::vector<std::string> presets;     // preset names
  std::vector<std::string> cartan_files;  // Satake data files (`cartan = {...}` blocks)
  std::vector<std::string> suites;      // empty list runs nothing
  bool suites_given = false;            // otherwise every suite runs
  SuiteOptions options;
  std::string json_path;                // empty: no JSON report
};

// Presets of the default run when none is named: every shipped preset.
const std::vector<std::string>& default_presets();

// Reads `preset`, `cartan-file`, `suite`, `height`, `seed`, `depth`, `json` from a
// key = value config; strings or arrays of strings are both accepted for lists.
ScenarioConfig scenario_from_config(const ConfigTable& t);
// Splits "a,b , c" into trimmed non-empty names.
std::vector<std::string> split_list(const std::string& s);

// Validates the configuration and expands it into jobs in a fixed order:
// presets as listed, then suites in registry order. Throws ConfigError.
std::vector<Job> scenario_jobs(const ScenarioConfig& cfg);

}  // namespace ihopf
