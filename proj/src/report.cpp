#include "hoft/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hoft/errors.hpp"
#include "json.hpp"

namespace hoft {
namespace {

using Json = nlohmann::ordered_json;

Json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

double read_number(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_number(j.get<std::string>());
  throw ConfigError("report: expected a number");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

double parse_number(const std::string& text) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) throw ConfigError("not a number: '" + text + "'");
  return v;
}

ReportRow& InequalityReport::add_row(const std::string& id, double lhs, double rhs, const std::string& note) {
  ReportRow row;
  row.function_id = id;
  row.lhs = lhs;
  row.rhs = rhs;
  row.ratio = (lhs == 0.0 && rhs == 0.0) ? 0.0 : lhs / rhs;
  row.note = note;
  rows.push_back(row);
  return rows.back();
}

SubCheck& InequalityReport::add_check(const std::string& name, double value, double bound_value, bool ok,
                                      const std::string& detail) {
  checks.push_back(SubCheck{name, value, bound_value, ok, detail});
  return checks.back();
}

void InequalityReport::add_parameter(const std::string& name, double value) { parameters.emplace_back(name, value); }

void InequalityReport::add_note(const std::string& key, const std::string& text) { notes.emplace_back(key, text); }

double InequalityReport::parameter(const std::string& name) const {
  for (const auto& [k, v] : parameters)
    if (k == name) return v;
  throw std::out_of_range("report parameter '" + name + "' not found");
}

const SubCheck* InequalityReport::find_check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void InequalityReport::finalize() {
  max_ratio = 0.0;
  bool ok = true;
  for (const auto& r : rows) {
    if (!r.included) continue;
    if (!std::isfinite(r.ratio)) ok = false;
    if (r.ratio > max_ratio || std::isnan(r.ratio)) max_ratio = r.ratio;
  }
  if (!(max_ratio <= bound)) ok = false;
  for (const auto& c : checks) ok = ok && c.pass;
  pass = ok;
}

std::string to_json(const InequalityReport& r) {
  Json j;
  j["suite"] = r.suite_id;
  j["inequality"] = r.inequality;
  j["datum"] = r.datum;
  j["pass"] = r.pass;
  j["max_ratio"] = number(r.max_ratio);
  j["bound"] = number(r.bound);
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = number(v);
  j["parameters"] = params;
  Json grid;
  grid["x_max"] = r.grid.x_max;
  grid["lambda_max"] = r.grid.lambda_max;
  grid["order"] = r.grid.order;
  grid["spectral_order"] = r.grid.spectral_order;
  grid["panels_per_unit"] = r.grid.panels_per_unit;
  grid["grading_levels"] = r.grid.grading_levels;
  grid["refine_factor"] = r.grid.refine_factor;
  grid["x_nodes"] = r.grid.x_nodes;
  grid["spectral_nodes"] = r.grid.spectral_nodes;
  j["grid"] = grid;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json o;
    o["function_id"] = row.function_id;
    o["lhs"] = number(row.lhs);
    o["rhs"] = number(row.rhs);
    o["ratio"] = number(row.ratio);
    o["included"] = row.included;
    o["note"] = row.note;
    rows.push_back(o);
  }
  j["rows"] = rows;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json o;
    o["name"] = c.name;
    o["value"] = number(c.value);
    o["bound"] = number(c.bound);
    o["pass"] = c.pass;
    o["detail"] = c.detail;
    checks.push_back(o);
  }
  j["checks"] = checks;
  Json notes = Json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

InequalityReport report_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("report: invalid JSON: ") + e.what());
  }
  InequalityReport r;
  r.suite_id = j.at("suite").get<std::string>();
  r.inequality = j.at("inequality").get<std::string>();
  r.datum = j.at("datum").get<std::string>();
  r.pass = j.at("pass").get<bool>();
  r.max_ratio = read_number(j.at("max_ratio"));
  r.bound = read_number(j.at("bound"));
  for (const auto& [k, v] : j.at("parameters").items()) r.parameters.emplace_back(k, read_number(v));
  const Json& g = j.at("grid");
  r.grid.x_max = g.at("x_max").get<double>();
  r.grid.lambda_max = g.at("lambda_max").get<double>();
  r.grid.order = g.at("order").get<int>();
  r.grid.spectral_order = g.at("spectral_order").get<int>();
  r.grid.panels_per_unit = g.at("panels_per_unit").get<int>();
  r.grid.grading_levels = g.at("grading_levels").get<int>();
  r.grid.refine_factor = g.at("refine_factor").get<int>();
  r.grid.x_nodes = g.at("x_nodes").get<std::size_t>();
  r.grid.spectral_nodes = g.at("spectral_nodes").get<std::size_t>();
  for (const auto& o : j.at("rows")) {
    ReportRow row;
    row.function_id = o.at("function_id").get<std::string>();
    row.lhs = read_number(o.at("lhs"));
    row.rhs = read_number(o.at("rhs"));
    row.ratio = read_number(o.at("ratio"));
    row.included = o.at("included").get<bool>();
    row.note = o.at("note").get<std::string>();
    r.rows.push_back(row);
  }
  for (const auto& o : j.at("checks")) {
    r.checks.push_back(SubCheck{o.at("name").get<std::string>(), read_number(o.at("value")),
                                read_number(o.at("bound")), o.at("pass").get<bool>(),
                                o.at("detail").get<std::string>()});
  }
  for (const auto& [k, v] : j.at("notes").items()) r.notes.emplace_back(k, v.get<std::string>());
  return r;
}

std::string to_csv(const InequalityReport& r) {
  std::ostringstream out;
  out << "suite,function_id,lhs,rhs,ratio\n";
  for (const auto& row : r.rows) {
    out << csv_field(r.suite_id) << ',' << csv_field(row.function_id) << ',' << format_number(row.lhs) << ','
        << format_number(row.rhs) << ',' << format_number(row.ratio) << '\n';
  }
  return out.str();
}

std::vector<ReportRow> rows_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<ReportRow> rows;
  if (!std::getline(in, line) || line != "suite,function_id,lhs,rhs,ratio") throw ConfigError("csv: unexpected header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 5) throw ConfigError("csv: expected 5 fields in line '" + line + "'");
    ReportRow row;
    row.function_id = f[1];
    row.lhs = parse_number(f[2]);
    row.rhs = parse_number(f[3]);
    row.ratio = parse_number(f[4]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hoft
