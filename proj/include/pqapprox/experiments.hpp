#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pqapprox/function_spec.hpp"
#include "pqapprox/kernels.hpp"
#include "pqapprox/operators.hpp"
#include "pqapprox/pq_core.hpp"

namespace pqapprox {

/// Function mini-DSL:
///   poly:<c0>,<c1>,...   ascending coefficients, domain [0, 2]
///   builtin:<name>       registry entry (quad, sinmix)
/// Throws ParseError (with character position) or RegistryError.
FunctionSpec parse_function(std::string_view text);

/// Comma-separated positive integers, e.g. "5,10,15,100".
std::vector<int> parse_n_list(std::string_view text);

struct GridSpec {
  double start = 0.0;
  double end = 1.0;
  int points = 201;
};

enum class OutputFormat { csv, json };

struct OutputSpec {
  OutputFormat format = OutputFormat::csv;
  std::string path;  // empty: standard output
};

struct ExperimentConfig {
  OperatorKind op = OperatorKind::durrmeyer;
  PqParams params;
  std::vector<int> n_values;
  FunctionSpec function;
  GridSpec grid;
  OutputSpec output;
  double tol = 1e-12;

  /// Throws ConfigError on: fewer than 2 grid points, start >= end, empty or
  /// non-increasing n list, n < 1, and for the King operator a grid leaving
  /// [0, [n+2]/(p[n])] for the smallest n.
  void validate() const;
  IntegrationPolicy policy() const;
};

struct ReportRow {
  double x = 0.0;
  std::vector<double> values;  // one per n
  std::vector<double> diffs;   // one per n
  std::optional<double> reference;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct CoefficientRow {
  int n = 0;
  std::vector<double> coefficients;  // of 1, x, x^2

  friend bool operator==(const CoefficientRow&, const CoefficientRow&) = default;
};

struct ConvergenceReport {
  std::optional<ExperimentConfig> config;
  std::vector<int> n_values;
  std::vector<ReportRow> rows;  // ascending x
  std::vector<CoefficientRow> coefficients;
  std::vector<double> reference_coefficients;

  /// max over rows of |diff| for the n_values[column] operator.
  double max_abs_diff(std::size_t column) const;
};

/// diff = operator(f, n, x) - f(x) on every grid point and n. Per-point
/// evaluation is independent of scheduling, so output is deterministic.
/// Failures are rethrown as ExperimentError (or ConvergenceError) naming n and x.
ConvergenceReport run_convergence(const ExperimentConfig& config,
                                  Execution execution = Execution::parallel);

/// diff = operator(f, n, x) - reference(x), plus the exact coefficients of the
/// image of the (at most quadratic) polynomial f for every n.
ConvergenceReport run_limit_comparison(const ExperimentConfig& config,
                                       const FunctionSpec& reference_poly,
                                       Execution execution = Execution::parallel);

/// The n -> infinity image of a quadratic polynomial under the operator, as a polynomial.
FunctionSpec limiting_image(OperatorKind kind, const FunctionSpec& f, const PqParams& params);

enum class IdentityStatus { pass, fail, expected_fail, unexpected_pass };

std::string_view to_string(IdentityStatus status);

struct IdentityResult {
  std::string name;
  std::size_t cases = 0;
  /// Relative for Beta identities, log-magnitude difference for the symmetric
  /// and splitting forms, absolute for the calculus identities.
  double max_error = 0.0;
  double tolerance = 0.0;
  IdentityStatus status = IdentityStatus::pass;

  bool ok() const noexcept {
    return status == IdentityStatus::pass || status == IdentityStatus::expected_fail;
  }
};

struct IdentityReport {
  double p = 0.0;
  double q = 0.0;
  int max_index = 0;
  std::vector<IdentityResult> results;

  bool all_ok() const;
  const IdentityResult& find(std::string_view name) const;
};

inline constexpr std::uint64_t kIdentitySeed = 20160101;

/// Batch check of the calculus and Beta/Gamma identities; failures are
/// report entries. max_index in [1, 12].
IdentityReport run_identity_suite(const PqParams& params, int max_index, double tol,
                                  std::uint64_t seed = kIdentitySeed,
                                  std::size_t random_cases = 200);

struct MomentsConfig {
  PqParams params;
  std::vector<int> n_values;
  GridSpec grid;
  std::optional<FunctionSpec> function;
  int modulus_grid = 128;
  double tol = 1e-12;
};

struct MomentsRow {
  int n = 0;
  double x = 0.0;
  double m1_coeff = 0.0;
  double m2_x_coeff = 0.0;
  double m2_x2_coeff = 0.0;
  double central1 = 0.0;
  double central2 = 0.0;
  double bound = 0.0;
  double delta_sq = 0.0;
  double combined = 0.0;
  double combined_bound = 0.0;
  double king_delta = 0.0;
  // error profile, present when a function is given
  std::optional<double> abs_error;
  std::optional<double> omega2_standard;
  std::optional<double> omega2_literal;
  std::optional<double> omega;
};

/// Moments, the second-moment bound and, for a given f, the side-by-side
/// profile of |D_n f - f| against omega_2(f, [n+2]^{-1/2} delta_n(x)) and
/// omega(f, 2x/[n+2]). Grid must lie in [0, 1].
std::vector<MomentsRow> run_moments(const MomentsConfig& config,
                                    Execution execution = Execution::parallel);

}  // namespace pqapprox
