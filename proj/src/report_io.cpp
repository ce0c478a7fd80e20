#include "pqapprox/report_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pqapprox/errors.hpp"

namespace pqapprox {

namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
}

double parse_cell(std::string_view cell, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw ParseError("bad number '" + std::string(cell) + "' on line " + std::to_string(line_no),
                     line_no);
  }
  return value;
}

int parse_column_n(std::string_view name, std::string_view prefix, std::size_t column) {
  if (!name.starts_with(prefix)) {
    throw ParseError("unexpected column '" + std::string(name) + "'", column);
  }
  const std::string_view digits = name.substr(prefix.size());
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError("bad column '" + std::string(name) + "'", column);
  }
  return n;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

void append_optional(std::string& line, const std::optional<double>& v) {
  line += ',';
  if (v) line += format_real(*v);
}

}  // namespace

std::string to_csv(const ConvergenceReport& report) {
  const bool with_reference = !report.rows.empty() && report.rows.front().reference.has_value();
  std::string out = "x";
  for (const int n : report.n_values) out += ",D_" + std::to_string(n);
  for (const int n : report.n_values) out += ",diff_" + std::to_string(n);
  if (with_reference) out += ",ref";
  out += '\n';
  for (const auto& row : report.rows) {
    out += format_real(row.x);
    for (const double v : row.values) out += ',' + format_real(v);
    for (const double d : row.diffs) out += ',' + format_real(d);
    if (with_reference) out += ',' + format_real(row.reference.value_or(0.0));
    out += '\n';
  }
  return out;
}

ConvergenceReport parse_csv_report(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty CSV", 0);

  const auto header = split(lines.front(), ',');
  if (header.empty() || header.front() != "x") throw ParseError("first column must be x", 0);
  const bool with_reference = header.back() == "ref";
  const std::size_t data_columns = header.size() - 1 - (with_reference ? 1 : 0);
  if (data_columns % 2 != 0) throw ParseError("unbalanced D_/diff_ columns", 0);
  const std::size_t k = data_columns / 2;

  ConvergenceReport report;
  for (std::size_t i = 0; i < k; ++i) {
    const int n = parse_column_n(header[1 + i], "D_", 1 + i);
    if (parse_column_n(header[1 + k + i], "diff_", 1 + k + i) != n) {
      throw ParseError("diff_ columns do not match D_ columns", 1 + k + i);
    }
    report.n_values.push_back(n);
  }

  for (std::size_t line_no = 1; line_no < lines.size(); ++line_no) {
    const auto cells = split(lines[line_no], ',');
    if (cells.size() != header.size()) {
      throw ParseError("wrong number of cells on line " + std::to_string(line_no), line_no);
    }
    ReportRow row;
    row.x = parse_cell(cells[0], line_no);
    for (std::size_t i = 0; i < k; ++i) row.values.push_back(parse_cell(cells[1 + i], line_no));
    for (std::size_t i = 0; i < k; ++i) row.diffs.push_back(parse_cell(cells[1 + k + i], line_no));
    if (with_reference) row.reference = parse_cell(cells.back(), line_no);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string coefficients_csv(const ConvergenceReport& report) {
  if (report.coefficients.empty()) return {};
  std::string out = "n,c0,c1,c2\n";
  const auto row = [&out](const std::string& label, const std::vector<double>& c) {
    out += label;
    for (std::size_t i = 0; i < 3; ++i) out += ',' + format_real(i < c.size() ? c[i] : 0.0);
    out += '\n';
  };
  for (const auto& c : report.coefficients) row(std::to_string(c.n), c.coefficients);
  row("ref", report.reference_coefficients);
  return out;
}

json config_to_json(const ExperimentConfig& config) {
  return json{
      {"operator", std::string(to_string(config.op))},
      {"p", config.params.p()},
      {"q", config.params.q()},
      {"n_values", config.n_values},
      {"function", config.function.to_string()},
      {"grid", {{"start", config.grid.start}, {"end", config.grid.end}, {"points", config.grid.points}}},
      {"tol", config.tol},
  };
}

json to_json(const ConvergenceReport& report) {
  json out = json::object();
  if (report.config) out["config"] = config_to_json(*report.config);
  json rows = json::array();
  json reference = json::array();
  for (const auto& row : report.rows) {
    json values = json::object();
    json diffs = json::object();
    for (std::size_t i = 0; i < report.n_values.size(); ++i) {
      const std::string key = std::to_string(report.n_values[i]);
      values[key] = row.values[i];
      diffs[key] = row.diffs[i];
    }
    rows.push_back({{"x", row.x}, {"values", values}, {"diffs", diffs}});
    if (row.reference) reference.push_back(*row.reference);
  }
  out["rows"] = rows;
  if (!reference.empty()) out["reference"] = reference;
  if (!report.coefficients.empty()) {
    json coefficients = json::object();
    for (const auto& c : report.coefficients) coefficients[std::to_string(c.n)] = c.coefficients;
    coefficients["ref"] = report.reference_coefficients;
    out["coefficients"] = coefficients;
  }
  return out;
}

std::string to_csv(const IdentityReport& report) {
  std::string out = "identity,cases,max_error,tolerance,status\n";
  for (const auto& r : report.results) {
    out += r.name + ',' + std::to_string(r.cases) + ',' + format_real(r.max_error) + ',' +
           format_real(r.tolerance) + ',' + std::string(to_string(r.status)) + '\n';
  }
  return out;
}

json to_json(const IdentityReport& report) {
  json results = json::array();
  for (const auto& r : report.results) {
    results.push_back({{"identity", r.name},
                       {"cases", r.cases},
                       {"max_error", r.max_error},
                       {"tolerance", r.tolerance},
                       {"status", std::string(to_string(r.status))}});
  }
  return json{{"p", report.p},
              {"q", report.q},
              {"max_index", report.max_index},
              {"all_ok", report.all_ok()},
              {"results", results}};
}

std::string to_csv(const std::vector<MomentsRow>& rows) {
  const bool profile = !rows.empty() && rows.front().abs_error.has_value();
  std::string out =
      "n,x,m1_coeff,m2_x_coeff,m2_x2_coeff,central1,central2,bound,delta_sq,combined,"
      "combined_bound,king_delta";
  if (profile) out += ",abs_error,omega2,omega2_literal,omega";
  out += '\n';
  for (const auto& r : rows) {
    std::string line = std::to_string(r.n);
    for (const double v : {r.x, r.m1_coeff, r.m2_x_coeff, r.m2_x2_coeff, r.central1, r.central2,
                           r.bound, r.delta_sq, r.combined, r.combined_bound, r.king_delta}) {
      line += ',' + format_real(v);
    }
    if (profile) {
      append_optional(line, r.abs_error);
      append_optional(line, r.omega2_standard);
      append_optional(line, r.omega2_literal);
      append_optional(line, r.omega);
    }
    out += line + '\n';
  }
  return out;
}

json to_json(const std::vector<MomentsRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row{{"n", r.n},
             {"x", r.x},
             {"m1_coeff", r.m1_coeff},
             {"m2_x_coeff", r.m2_x_coeff},
             {"m2_x2_coeff", r.m2_x2_coeff},
             {"central1", r.central1},
             {"central2", r.central2},
             {"bound", r.bound},
             {"delta_sq", r.delta_sq},
             {"combined", r.combined},
             {"combined_bound", r.combined_bound},
             {"king_delta", r.king_delta}};
    if (r.abs_error) {
      row["abs_error"] = optional_json(r.abs_error);
      row["omega2"] = optional_json(r.omega2_standard);
      row["omega2_literal"] = optional_json(r.omega2_literal);
      row["omega"] = optional_json(r.omega);
    }
    out.push_back(row);
  }
  return out;
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open output file " + path);
  file << text;
  if (!file) throw ConfigError("failed writing output file " + path);
}

}  // namespace pqapprox
