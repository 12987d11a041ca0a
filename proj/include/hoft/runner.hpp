#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hoft/config.hpp"
#include "hoft/harness.hpp"

namespace hoft {

struct RunOptions {
  std::optional<std::string> out_dir;
  std::optional<int> refine;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> suite_ids;  // empty: all
  std::set<std::string> suite_types;   // empty: all
};

struct SuiteStatus {
  std::string id;
  std::string type;
  std::string datum;
  bool pass = false;
  double max_ratio = 0.0;
  std::string error;  // non-empty when the suite aborted
  double seconds = 0.0;
};

struct RunSummary {
  std::vector<SuiteStatus> suites;
  bool pass = true;
};

/// Applies command-line overrides to a parsed config.
RunConfig apply_options(RunConfig config, const RunOptions& options);

/// Runs one configured suite against the shared harness.
SuiteOutput run_suite(const RunConfig& config, const SuiteConfig& suite, Harness& harness);

/// Runs the selected suites in order and writes, under config.out_dir:
/// <id>.json, <id>.csv, plots/<id>_<series>.csv, summary.json and timings.json.
/// A suite that throws is marked failed and the run continues. Progress lines go to `log`.
RunSummary run(const RunConfig& config, const RunOptions& options, std::ostream* log = nullptr);

std::string summary_json(const RunConfig& config, const RunSummary& summary);
std::string timings_json(const RunSummary& summary);
std::string plot_csv(const PlotSeries& series);

}  // namespace hoft
