#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hoft {

/// One tested function (or pair) of an inequality check.
struct ReportRow {
  std::string function_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs/rhs, defined as 0 when both sides vanish
  bool included = true;  // false when the row is excluded from the pass decision
  std::string note;
};

/// A named numerical sub-check with the value found and the bound it is held to.
struct SubCheck {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool pass = true;
  std::string detail;
};

struct GridMetadata {
  double x_max = 0.0;
  double lambda_max = 0.0;
  int order = 0;
  int spectral_order = 0;
  int panels_per_unit = 0;
  int grading_levels = 0;
  int refine_factor = 1;
  std::size_t x_nodes = 0;
  std::size_t spectral_nodes = 0;
};

/// Result of one suite: per-function rows, named sub-checks and the pass flag.
/// Timings are kept out of the report so reports are reproducible byte for byte.
struct InequalityReport {
  std::string suite_id;
  std::string inequality;
  std::string datum;
  std::vector<std::pair<std::string, double>> parameters;
  std::vector<ReportRow> rows;
  std::vector<SubCheck> checks;
  std::vector<std::pair<std::string, std::string>> notes;
  GridMetadata grid;
  double max_ratio = 0.0;
  double bound = 0.0;  // pass threshold on max_ratio; +inf means "finite"
  bool pass = true;

  /// Appends a row, computing the ratio (0 when lhs = rhs = 0).
  ReportRow& add_row(const std::string& id, double lhs, double rhs, const std::string& note = "");
  SubCheck& add_check(const std::string& name, double value, double bound, bool pass, const std::string& detail = "");
  void add_parameter(const std::string& name, double value);
  void add_note(const std::string& key, const std::string& text);
  /// Value of a named parameter; throws std::out_of_range when absent.
  double parameter(const std::string& name) const;
  const SubCheck* find_check(const std::string& name) const;

  /// Recomputes max_ratio over included rows and sets pass to: every included ratio
  /// finite, max_ratio <= bound, and every sub-check passing.
  void finalize();
};

std::string to_json(const InequalityReport& report);
InequalityReport report_from_json(const std::string& text);

/// CSV with header suite,function_id,lhs,rhs,ratio.
std::string to_csv(const InequalityReport& report);
std::vector<ReportRow> rows_from_csv(const std::string& text);

/// Shortest round-trip representation; "inf", "-inf", "nan" for non-finite values.
std::string format_number(double value);
double parse_number(const std::string& text);

}  // namespace hoft
