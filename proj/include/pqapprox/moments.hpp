#pragma once

// Closed-form moments of the operators and the quantities built from them.
//
// All coefficients are evaluated in normalized form: with r = q/p every ratio
// of (p,q)-numbers becomes a ratio of (1 - r^j) factors times a small integer
// power of p, so nothing underflows as n grows (e.g. [n]_{0.5,0.4} ~ 2^{-n}).

#include <utility>
#include <vector>

#include "pqapprox/operators.hpp"
#include "pqapprox/pq_core.hpp"

namespace pqapprox {

/// L(e0,x) = m0, L(e1,x) = m1_coeff x, L(e2,x) = m2_x_coeff x + m2_x2_coeff x^2.
/// n == 0 marks the n -> infinity limit (see limiting_moments).
struct MomentTable {
  int n = 0;
  PqParams params;
  double m0 = 1.0;
  double m1_coeff = 0.0;
  double m2_x_coeff = 0.0;
  double m2_x2_coeff = 0.0;

  double e1(double x) const noexcept { return m1_coeff * x; }
  double e2(double x) const noexcept { return (m2_x_coeff + m2_x2_coeff * x) * x; }
  /// L(c0 + c1 t + c2 t^2, x) expressed as coefficients of 1, x, x^2.
  std::vector<double> image_of_quadratic(const std::vector<double>& coefficients) const;
};

MomentTable bernstein_moments(int n, const PqParams& params);
MomentTable durrmeyer_moments(int n, const PqParams& params);
MomentTable king_moments(int n, const PqParams& params);
MomentTable moments_for(OperatorKind kind, int n, const PqParams& params);
/// Coefficients as n -> infinity (r^n -> 0); n is set to 0.
MomentTable limiting_moments(OperatorKind kind, const PqParams& params);

/// (D_n(t - x, x), D_n((t - x)^2, x)); x in [0, 1].
std::pair<double, double> central_moments(int n, double x, const PqParams& params);

/// phi^2(x) = x (1 - x).
double phi_squared(double x) noexcept;
/// delta_n^2(x) = phi^2(x) + 1/[n+2].
double delta_squared(int n, double x, const PqParams& params);
/// (6/[n+2]) (phi^2(x) + 1/[n+2]).
double second_moment_bound(int n, double x, const PqParams& params);
/// D_n((t-x)^2, x) + (p[n]x/[n+2] - x)^2, and its majorant (10/[n+2]) delta_n^2(x).
double combined_moment(int n, double x, const PqParams& params);
double combined_bound(int n, double x, const PqParams& params);

/// delta^{p,q}_n(x) = D*_n((t-x)^2, x). Requires x >= 0.
double king_delta(int n, double x, const PqParams& params);

struct BoundProfile {
  int n = 0;
  std::vector<double> grid;
  std::vector<double> second_central_moment;
  std::vector<double> bound;
  std::vector<double> delta_sq;

  /// Grid indices where the second central moment exceeds the bound.
  std::vector<std::size_t> violations() const;
};

BoundProfile bound_profile(int n, const PqParams& params, const std::vector<double>& grid);

}  // namespace pqapprox
