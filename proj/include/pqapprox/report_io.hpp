#pragma once

// CSV and JSON serialization of experiment results. Every real is written in
// shortest round-trip form, so identical inputs give byte-identical files and
// a CSV report reparses to exactly the same values.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pqapprox/experiments.hpp"

namespace pqapprox {

/// Header `x,D_<n1>,...,D_<nk>,diff_<n1>,...,diff_<nk>[,ref]`, LF line endings.
std::string to_csv(const ConvergenceReport& report);
/// Inverse of to_csv for the row data (config and coefficients are not in the CSV).
ConvergenceReport parse_csv_report(std::string_view text);
/// `n,c0,c1,c2` rows for each n followed by a `ref` row; empty without coefficients.
std::string coefficients_csv(const ConvergenceReport& report);

nlohmann::json config_to_json(const ExperimentConfig& config);
/// {config, rows: [{x, values: {n: v}, diffs: {n: d}}], reference?, coefficients?}
nlohmann::json to_json(const ConvergenceReport& report);

std::string to_csv(const IdentityReport& report);
nlohmann::json to_json(const IdentityReport& report);

std::string to_csv(const std::vector<MomentsRow>& rows);
nlohmann::json to_json(const std::vector<MomentsRow>& rows);

/// Writes text to `path` (binary mode, so LF stays LF), or to stdout when path is empty.
void write_text(const std::string& text, const std::string& path);

}  // namespace pqapprox
