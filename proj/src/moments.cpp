#include "pqapprox/moments.hpp"

#include <cmath>

#include "pqapprox/errors.hpp"

namespace pqapprox {

namespace {

void require_degree(int n) {
  if (n < 1) throw DomainError("moments: n must be a positive integer");
}

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + ": x must lie in [0, 1]");
  }
}

// 1 - r^j
double u(std::int64_t j, const PqParams& params) { return one_minus_ratio_power(j, params); }

// 1 / [n]_{p,q} = p^{-(n-1)} (1 - r) / (1 - r^n)
double inverse_pq_number(int n, const PqParams& params) {
  return std::exp(-static_cast<double>(n - 1) * params.log_p()) * u(1, params) / u(n, params);
}

}  // namespace

std::vector<double> MomentTable::image_of_quadratic(const std::vector<double>& c) const {
  if (c.empty() || c.size() > 3) {
    throw DomainError("image_of_quadratic: expected 1 to 3 coefficients");
  }
  const double c0 = c[0];
  const double c1 = c.size() > 1 ? c[1] : 0.0;
  const double c2 = c.size() > 2 ? c[2] : 0.0;
  return {m0 * c0, c1 * m1_coeff + c2 * m2_x_coeff, c2 * m2_x2_coeff};
}

MomentTable bernstein_moments(int n, const PqParams& params) {
  require_degree(n);
  // B(e2, x) = x^2 + x(1 - x)/([n]/p^{n-1})
  const double inv = u(1, params) / u(n, params);
  return {.n = n, .params = params, .m0 = 1.0, .m1_coeff = 1.0, .m2_x_coeff = inv,
          .m2_x2_coeff = 1.0 - inv};
}

MomentTable durrmeyer_moments(int n, const PqParams& params) {
  require_degree(n);
  const double p = params.p();
  const double r = params.ratio();
  const double tail = u(n + 2, params) * u(n + 3, params);
  return {.n = n,
          .params = params,
          .m0 = 1.0,
          .m1_coeff = u(n, params) / (p * u(n + 2, params)),
          .m2_x_coeff = u(2, params) * u(n, params) / (p * p * tail),
          .m2_x2_coeff = r * r * u(n - 1, params) * u(n, params) / (p * p * tail)};
}

MomentTable king_moments(int n, const PqParams& params) {
  require_degree(n);
  const double r = params.ratio();
  return {.n = n,
          .params = params,
          .m0 = 1.0,
          .m1_coeff = 1.0,
          .m2_x_coeff = u(2, params) / (params.p() * u(n + 3, params)),
          .m2_x2_coeff = r * r * u(n - 1, params) * u(n + 2, params) /
                         (u(n, params) * u(n + 3, params))};
}

MomentTable moments_for(OperatorKind kind, int n, const PqParams& params) {
  switch (kind) {
    case OperatorKind::bernstein:
      return bernstein_moments(n, params);
    case OperatorKind::durrmeyer:
      return durrmeyer_moments(n, params);
    case OperatorKind::king_durrmeyer:
      break;
  }
  return king_moments(n, params);
}

MomentTable limiting_moments(OperatorKind kind, const PqParams& params) {
  const double p = params.p();
  const double r = params.ratio();
  switch (kind) {
    case OperatorKind::bernstein:
      return {.n = 0, .params = params, .m0 = 1.0, .m1_coeff = 1.0, .m2_x_coeff = 0.0,
              .m2_x2_coeff = 1.0};
    case OperatorKind::durrmeyer:
      return {.n = 0, .params = params, .m0 = 1.0, .m1_coeff = 1.0 / p,
              .m2_x_coeff = u(2, params) / (p * p), .m2_x2_coeff = r * r / (p * p)};
    case OperatorKind::king_durrmeyer:
      break;
  }
  return {.n = 0, .params = params, .m0 = 1.0, .m1_coeff = 1.0,
          .m2_x_coeff = u(2, params) / p, .m2_x2_coeff = r * r};
}

std::pair<double, double> central_moments(int n, double x, const PqParams& params) {
  require_unit_interval(x, "central_moments");
  const MomentTable m = durrmeyer_moments(n, params);
  const double first = (m.m1_coeff - 1.0) * x;
  const double second = m.m2_x_coeff * x + (m.m2_x2_coeff - 2.0 * m.m1_coeff + 1.0) * x * x;
  return {first, second};
}

double phi_squared(double x) noexcept { return x * (1.0 - x); }

double delta_squared(int n, double x, const PqParams& params) {
  require_degree(n);
  return phi_squared(x) + inverse_pq_number(n + 2, params);
}

double second_moment_bound(int n, double x, const PqParams& params) {
  require_unit_interval(x, "second_moment_bound");
  return 6.0 * inverse_pq_number(n + 2, params) * delta_squared(n, x, params);
}

double combined_moment(int n, double x, const PqParams& params) {
  const auto [first, second] = central_moments(n, x, params);
  return second + first * first;
}

double combined_bound(int n, double x, const PqParams& params) {
  require_unit_interval(x, "combined_bound");
  return 10.0 * inverse_pq_number(n + 2, params) * delta_squared(n, x, params);
}

double king_delta(int n, double x, const PqParams& params) {
  if (x < 0.0) throw DomainError("king_delta: x must be nonnegative");
  const MomentTable m = king_moments(n, params);
  return m.m2_x_coeff * x + (m.m2_x2_coeff - 1.0) * x * x;
}

std::vector<std::size_t> BoundProfile::violations() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (second_central_moment[i] > bound[i]) out.push_back(i);
  }
  return out;
}

BoundProfile bound_profile(int n, const PqParams& params, const std::vector<double>& grid) {
  BoundProfile profile;
  profile.n = n;
  profile.grid = grid;
  for (double x : grid) {
    profile.second_central_moment.push_back(central_moments(n, x, params).second);
    profile.bound.push_back(second_moment_bound(n, x, params));
    profile.delta_sq.push_back(delta_squared(n, x, params));
  }
  return profile;
}

}  // namespace pqapprox
