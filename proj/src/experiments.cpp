#include "pqapprox/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "pqapprox/errors.hpp"
#include "pqapprox/moduli.hpp"
#include "pqapprox/moments.hpp"

namespace pqapprox {

namespace {

constexpr std::string_view kPolyPrefix = "poly:";
constexpr std::string_view kBuiltinPrefix = "builtin:";

double parse_real(std::string_view token, std::size_t offset) {
  if (token.empty()) throw ParseError("expected a number", offset);
  double value = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) throw ParseError("expected a number", offset);
  if (ptr != last) {
    throw ParseError("unexpected character in number",
                     offset + static_cast<std::size_t>(ptr - token.data()));
  }
  if (!std::isfinite(value)) throw ParseError("coefficient must be finite", offset);
  return value;
}

std::string point_context(int n, double x) {
  std::ostringstream os;
  os << "n=" << n << ", x=" << format_real(x);
  return os.str();
}

[[noreturn]] void rethrow_with_context(int n, double x, bool at_point) {
  const std::string where = at_point ? point_context(n, x) : "n=" + std::to_string(n);
  try {
    throw;
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(where + ": " + e.what(), e.partial_sum(), e.terms());
  } catch (const ExperimentError&) {
    throw;
  } catch (const std::exception& e) {
    throw ExperimentError(where + ": " + e.what(), n, at_point ? x : std::nan(""));
  }
}

std::vector<double> padded_quadratic(const FunctionSpec& f) {
  if (!f.is_polynomial() || f.coefficients().size() > 3) {
    throw ConfigError("limit comparison needs a polynomial of degree at most 2, got " +
                      f.to_string());
  }
  std::vector<double> c = f.coefficients();
  c.resize(3, 0.0);
  return c;
}

struct GridRun {
  std::vector<double> xs;
  std::vector<std::vector<double>> values;  // [n index][x index]
};

GridRun evaluate_operators(const ExperimentConfig& config, Execution execution) {
  GridRun run;
  run.xs = uniform_grid(config.grid.start, config.grid.end, config.grid.points);
  const IntegrationPolicy policy = config.policy();
  for (const int n : config.n_values) {
    std::unique_ptr<ApproximationOperator> op;
    try {
      op = std::make_unique<ApproximationOperator>(config.op, config.function, n, config.params,
                                                   policy);
    } catch (...) {
      rethrow_with_context(n, 0.0, false);
    }
    run.values.push_back(evaluate_on_grid(
        [&](double x) {
          try {
            return (*op)(x);
          } catch (...) {
            rethrow_with_context(n, x, true);
          }
        },
        run.xs, execution));
  }
  return run;
}

double evaluate_target(const FunctionSpec& f, double x) {
  try {
    return f(x);
  } catch (const std::exception& e) {
    throw ExperimentError("target at x=" + format_real(x) + ": " + e.what(), 0, x);
  }
}

}  // namespace

FunctionSpec parse_function(std::string_view text) {
  if (text.starts_with(kPolyPrefix)) {
    std::vector<double> coefficients;
    std::size_t pos = kPolyPrefix.size();
    while (true) {
      const std::size_t comma = text.find(',', pos);
      const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
      coefficients.push_back(parse_real(text.substr(pos, stop - pos), pos));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return FunctionSpec::polynomial(std::move(coefficients));
  }
  if (text.starts_with(kBuiltinPrefix)) {
    const std::string_view name = text.substr(kBuiltinPrefix.size());
    if (name.empty()) throw ParseError("expected a builtin name", kBuiltinPrefix.size());
    return FunctionSpec::builtin(name);
  }
  throw ParseError("expected 'poly:' or 'builtin:'", 0);
}

std::vector<int> parse_n_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view token = text.substr(pos, stop - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("expected a positive integer", pos);
    }
    if (value < 1) throw ParseError("n must be at least 1", pos);
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

void ExperimentConfig::validate() const {
  if (grid.points < 2) throw ConfigError("grid needs at least 2 points");
  if (!(grid.start < grid.end)) throw ConfigError("grid start must be below grid end");
  if (!(grid.start >= 0.0) || !std::isfinite(grid.end)) {
    throw ConfigError("grid must lie in [0, inf)");
  }
  if (n_values.empty()) throw ConfigError("n list is empty");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 1) throw ConfigError("n must be at least 1");
    if (i > 0 && n_values[i] <= n_values[i - 1]) {
      throw ConfigError("n list must be strictly increasing");
    }
  }
  if (op == OperatorKind::king_durrmeyer) {
    const double end = king_interval_end(n_values.front(), params);
    if (grid.end > end) {
      throw ConfigError("grid end " + format_real(grid.end) + " exceeds [n+2]/(p[n]) = " +
                        format_real(end) + " for n=" + std::to_string(n_values.front()));
    }
  }
  try {
    policy().validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

IntegrationPolicy ExperimentConfig::policy() const {
  IntegrationPolicy policy;
  policy.rel_tol = tol;
  return policy;
}

double ConvergenceReport::max_abs_diff(std::size_t column) const {
  double best = 0.0;
  for (const auto& row : rows) best = std::max(best, std::fabs(row.diffs.at(column)));
  return best;
}

ConvergenceReport run_convergence(const ExperimentConfig& config, Execution execution) {
  config.validate();
  const GridRun run = evaluate_operators(config, execution);

  ConvergenceReport report;
  report.config = config;
  report.n_values = config.n_values;
  report.rows.reserve(run.xs.size());
  for (std::size_t i = 0; i < run.xs.size(); ++i) {
    ReportRow row;
    row.x = run.xs[i];
    const double target = evaluate_target(config.function, row.x);
    for (const auto& values : run.values) {
      row.values.push_back(values[i]);
      row.diffs.push_back(values[i] - target);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

ConvergenceReport run_limit_comparison(const ExperimentConfig& config,
                                       const FunctionSpec& reference_poly, Execution execution) {
  config.validate();
  const std::vector<double> c = padded_quadratic(config.function);
  if (!reference_poly.is_polynomial()) {
    throw ConfigError("reference must be a polynomial, got " + reference_poly.to_string());
  }
  const GridRun run = evaluate_operators(config, execution);

  ConvergenceReport report;
  report.config = config;
  report.n_values = config.n_values;
  for (std::size_t i = 0; i < run.xs.size(); ++i) {
    ReportRow row;
    row.x = run.xs[i];
    const double reference = evaluate_target(reference_poly, row.x);
    row.reference = reference;
    for (const auto& values : run.values) {
      row.values.push_back(values[i]);
      row.diffs.push_back(values[i] - reference);
    }
    report.rows.push_back(std::move(row));
  }
  for (const int n : config.n_values) {
    report.coefficients.push_back(
        {n, moments_for(config.op, n, config.params).image_of_quadratic(c)});
  }
  report.reference_coefficients = reference_poly.coefficients();
  return report;
}

FunctionSpec limiting_image(OperatorKind kind, const FunctionSpec& f, const PqParams& params) {
  const std::vector<double> c = padded_quadratic(f);
  return FunctionSpec::polynomial(limiting_moments(kind, params).image_of_quadratic(c),
                                  f.domain());
}

std::vector<MomentsRow> run_moments(const MomentsConfig& config, Execution execution) {
  if (config.grid.start < 0.0 || config.grid.end > 1.0) {
    throw ConfigError("moments grid must lie in [0, 1]");
  }
  if (config.n_values.empty()) throw ConfigError("n list is empty");
  const std::vector<double> xs =
      uniform_grid(config.grid.start, config.grid.end, config.grid.points);
  IntegrationPolicy policy;
  policy.rel_tol = config.tol;

  std::vector<MomentsRow> rows;
  for (const int n : config.n_values) {
    if (n < 1) throw ConfigError("n must be at least 1");
    const MomentTable table = durrmeyer_moments(n, config.params);
    const double bracket = pq_number(n + 2, config.params);
    std::unique_ptr<DurrmeyerOperator> op;
    if (config.function) {
      try {
        op = std::make_unique<DurrmeyerOperator>(*config.function, n, config.params, policy);
      } catch (...) {
        rethrow_with_context(n, 0.0, false);
      }
    }

    std::vector<MomentsRow> block(xs.size());
    parallel_for(
        static_cast<std::ptrdiff_t>(xs.size()),
        [&](std::ptrdiff_t i) {
          const double x = xs[i];
          try {
            MomentsRow& row = block[i];
            row.n = n;
            row.x = x;
            row.m1_coeff = table.m1_coeff;
            row.m2_x_coeff = table.m2_x_coeff;
            row.m2_x2_coeff = table.m2_x2_coeff;
            std::tie(row.central1, row.central2) = central_moments(n, x, config.params);
            row.bound = second_moment_bound(n, x, config.params);
            row.delta_sq = delta_squared(n, x, config.params);
            row.combined = combined_moment(n, x, config.params);
            row.combined_bound = combined_bound(n, x, config.params);
            row.king_delta = king_delta(n, x, config.params);
            if (!op) return;
            const FunctionSpec& f = *config.function;
            row.abs_error = std::fabs((*op)(x) - f(x));
            const double step = std::min(1.0, std::sqrt(row.delta_sq / bracket));
            row.omega2_standard = empirical_second_modulus(
                f, step, config.modulus_grid, SecondDifference::standard, Execution::serial);
            row.omega2_literal = empirical_second_modulus(
                f, step, config.modulus_grid, SecondDifference::literal, Execution::serial);
            const double shift = std::min(1.0, 2.0 * x / bracket);
            row.omega = shift > 0.0 ? empirical_modulus(f, shift, config.modulus_grid,
                                                        Execution::serial)
                                    : 0.0;
          } catch (...) {
            rethrow_with_context(n, x, true);
          }
        },
        execution);
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rows;
}

}  // namespace pqapprox
