#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hoft/harness.hpp"

namespace hoft {

/// One configured suite. Numeric parameters are stored as lists; scalars have one entry.
struct SuiteConfig {
  std::string id;
  std::string type;
  std::string datum;  // key into RunConfig::data; empty for datum-free suites
  int line = 0;       // 1-based line of the suite entry in the config file
  std::map<std::string, std::vector<double>> params;
  std::optional<WeightSpec> weight;  // hl_weighted; unset means the natural choice
  std::optional<Family> family;      // unset means the run's family
  std::optional<GridOptions> x_grid;
  std::optional<GridOptions> spectral_grid;

  bool has(const std::string& key) const { return params.count(key) > 0; }
  double scalar(const std::string& key) const;
  const std::vector<double>& list(const std::string& key) const;
};

struct RunConfig {
  std::string source = "<memory>";
  std::uint64_t seed = 20240611;
  int refine = 2;
  std::string out_dir = "hoft_out";
  GridOptions x_grid;
  GridOptions spectral_grid = HarnessSettings::default_spectral_grid();
  TestFunctionSpec calibration = HarnessSettings::default_calibration();
  std::vector<std::pair<std::string, RootDatum>> data;
  Family family = default_family();
  std::vector<SuiteConfig> suites;

  const RootDatum& datum(const std::string& name) const;
  HarnessSettings settings() const;
  /// Run settings with the suite's grid overrides applied.
  HarnessSettings settings(const SuiteConfig& suite) const;
};

/// Suite types understood by the runner, with a one-line description each.
const std::vector<std::pair<std::string, std::string>>& suite_types();

/// Parses YAML text. Every error is a ConfigError prefixed with "source:line:".
/// Runs the cheap parameter validations of the suites (ranges, tube, weight spec).
RunConfig parse_config(const std::string& text, const std::string& source = "<memory>");
RunConfig load_config(const std::string& path);

/// YAML form of a config; parse_config(dump_config(c)) reproduces c.
std::string dump_config(const RunConfig& config);

}  // namespace hoft
