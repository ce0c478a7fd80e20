// pqapprox: convergence, limit, identity and moment experiments for the
// (p,q)-Bernstein-Durrmeyer family, written as CSV or JSON.
//
// Exit codes: 0 success, 1 identity check or evaluation failure,
// 2 configuration/parse error, 3 series convergence failure.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "pqapprox/errors.hpp"
#include "pqapprox/experiments.hpp"
#include "pqapprox/moments.hpp"
#include "pqapprox/report_io.hpp"

namespace {

using namespace pqapprox;

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;

struct CommonOptions {
  double p = 0.5;
  double q = 0.4;
  std::string n_list = "5,10,15,100";
  std::string function = "builtin:quad";
  double grid_start = 0.0;
  std::optional<double> grid_end;
  int grid_points = 201;
  double tol = 1e-12;
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--p", o.p, "deformation parameter p, 0 < q < p <= 1")->capture_default_str();
  cmd->add_option("--q", o.q, "deformation parameter q")->capture_default_str();
  cmd->add_option("--n", o.n_list, "comma-separated, strictly increasing degrees")
      ->capture_default_str();
  cmd->add_option("--f", o.function, "poly:<c0>,<c1>,... or builtin:<name>")
      ->capture_default_str();
  cmd->add_option("--grid-start", o.grid_start)->capture_default_str();
  cmd->add_option("--grid-end", o.grid_end);
  cmd->add_option("--grid-points", o.grid_points)->capture_default_str();
  cmd->add_option("--tol", o.tol, "series truncation tolerance")->capture_default_str();
  cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  cmd->add_option("--out", o.out, "output path (default: stdout)");
}

OutputFormat output_format(const CommonOptions& o) {
  return o.format == "json" ? OutputFormat::json : OutputFormat::csv;
}

ExperimentConfig make_config(const CommonOptions& o, OperatorKind kind) {
  ExperimentConfig config{
      .op = kind,
      .params = PqParams(o.p, o.q),
      .n_values = parse_n_list(o.n_list),
      .function = parse_function(o.function),
      .grid = {o.grid_start, 1.0, o.grid_points},
      .output = {output_format(o), o.out},
      .tol = o.tol,
  };
  if (o.grid_end) {
    config.grid.end = *o.grid_end;
  } else if (kind == OperatorKind::king_durrmeyer) {
    config.grid.end = king_interval_end(config.n_values.front(), config.params);
  }
  return config;
}

void emit(const ConvergenceReport& report, const OutputSpec& output) {
  if (output.format == OutputFormat::json) {
    write_text(to_json(report).dump(2) + '\n', output.path);
    return;
  }
  write_text(to_csv(report), output.path);
  const std::string coefficients = coefficients_csv(report);
  if (!coefficients.empty() && !output.path.empty()) {
    write_text(coefficients, output.path + ".coefficients.csv");
  }
}

template <class Report>
void emit_table(const Report& report, const CommonOptions& o) {
  if (output_format(o) == OutputFormat::json) {
    write_text(to_json(report).dump(2) + '\n', o.out);
  } else {
    write_text(to_csv(report), o.out);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Experiments with (p,q)-Bernstein-Durrmeyer operators"};
  app.require_subcommand(1);

  CommonOptions converge_opts;
  std::string operator_name = "durrmeyer";
  auto* converge = app.add_subcommand("converge", "operator(f, n, x) - f(x) on a grid");
  add_common(converge, converge_opts);
  converge->add_option("--operator", operator_name, "bernstein, durrmeyer or king_durrmeyer")
      ->capture_default_str();

  CommonOptions king_opts;
  auto* king = app.add_subcommand(
      "king", "King-modified operator; grid end defaults to [n+2]/(p[n]) for the smallest n");
  add_common(king, king_opts);

  CommonOptions limit_opts;
  limit_opts.n_list = "10,15,20,50";
  std::string limit_operator = "durrmeyer";
  std::string reference;
  auto* limit = app.add_subcommand(
      "limit", "operator(f, n, x) - f*(x) and exact quadratic coefficients; f of degree <= 2");
  add_common(limit, limit_opts);
  limit->add_option("--operator", limit_operator)->capture_default_str();
  limit->add_option("--ref", reference, "reference polynomial (default: the n -> inf image of f)");

  CommonOptions identity_opts;
  identity_opts.tol = 1e-9;
  int max_index = 8;
  auto* identities = app.add_subcommand("identities", "batch check of calculus and Beta identities");
  identities->add_option("--p", identity_opts.p)->capture_default_str();
  identities->add_option("--q", identity_opts.q)->capture_default_str();
  identities->add_option("--max-index", max_index, "largest Beta index, at most 12")
      ->capture_default_str();
  identities->add_option("--tol", identity_opts.tol, "pass threshold")->capture_default_str();
  identities->add_option("--format", identity_opts.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  identities->add_option("--out", identity_opts.out);

  CommonOptions moments_opts;
  moments_opts.n_list = "10,20,50";
  moments_opts.function.clear();
  int modulus_grid = 128;
  auto* moments = app.add_subcommand(
      "moments", "moments, second-moment bound and, with --f, the error-vs-modulus profile");
  add_common(moments, moments_opts);
  moments->add_option("--modulus-grid", modulus_grid)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*converge || *king) {
      const bool is_king = static_cast<bool>(*king);
      const CommonOptions& o = is_king ? king_opts : converge_opts;
      const OperatorKind kind =
          is_king ? OperatorKind::king_durrmeyer : parse_operator_kind(operator_name);
      const ExperimentConfig config = make_config(o, kind);
      emit(run_convergence(config), config.output);
    } else if (*limit) {
      const ExperimentConfig config = make_config(limit_opts, parse_operator_kind(limit_operator));
      const FunctionSpec ref = reference.empty()
                                   ? limiting_image(config.op, config.function, config.params)
                                   : parse_function(reference);
      emit(run_limit_comparison(config, ref), config.output);
    } else if (*identities) {
      const IdentityReport report = run_identity_suite(
          PqParams(identity_opts.p, identity_opts.q), max_index, identity_opts.tol);
      emit_table(report, identity_opts);
      return report.all_ok() ? 0 : kExitFailure;
    } else if (*moments) {
      const CommonOptions& o = moments_opts;
      MomentsConfig config{
          .params = PqParams(o.p, o.q),
          .n_values = parse_n_list(o.n_list),
          .grid = {o.grid_start, o.grid_end.value_or(1.0), o.grid_points},
          .function = o.function.empty() ? std::nullopt
                                         : std::optional<FunctionSpec>(parse_function(o.function)),
          .modulus_grid = modulus_grid,
          .tol = o.tol,
      };
      emit_table(run_moments(config), o);
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence failure: " << e.what() << " (partial sum "
              << format_real(e.partial_sum()) << " after " << e.terms() << " terms)\n";
    return kExitConvergence;
  } catch (const ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
