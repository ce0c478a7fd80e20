#include "pqapprox/special_functions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pqapprox/errors.hpp"

namespace pqapprox {

namespace {

void require_positive(int v, const char* what) {
  if (v < 1) {
    std::ostringstream os;
    os << what << ": argument must be a positive integer, got " << v;
    throw DomainError(os.str());
  }
}

// Both exponent polynomials are even at every integer point; an odd value
// means the formula was mistyped.
std::int64_t half_of_even(std::int64_t twice) {
  if (twice % 2 != 0) throw std::logic_error("p-power exponent is not an integer");
  return twice / 2;
}

ScaledPqValue gamma_ratio(int m, int n, const PqParams& params) {
  return scaled_pq_gamma(m, params) * scaled_pq_gamma(n, params) /
         scaled_pq_gamma(m + n, params);
}

}  // namespace

ScaledPqValue scaled_pq_gamma(int n, const PqParams& params) {
  require_positive(n, "pq_gamma");
  return scaled_pq_factorial(n - 1, params);
}

double pq_gamma(int n, const PqParams& params) {
  require_positive(n, "pq_gamma");
  return pq_factorial(n - 1, params);
}

ScaledPqValue scaled_pq_beta(int m, int n, const PqParams& params) {
  require_positive(m, "pq_beta");
  require_positive(n, "pq_beta");
  const std::int64_t mm = m;
  const std::int64_t nn = n;
  return ScaledPqValue::p_power(half_of_even((nn - 1) * (2 * mm + nn - 2))) *
         gamma_ratio(m, n, params);
}

ScaledPqValue scaled_pq_beta_commutative(int m, int n, const PqParams& params) {
  require_positive(m, "pq_beta_commutative");
  require_positive(n, "pq_beta_commutative");
  const std::int64_t mm = m;
  const std::int64_t nn = n;
  const std::int64_t twice = 2 * mm * nn + mm * mm + nn * nn - 3 * mm - 3 * nn + 2;
  return ScaledPqValue::p_power(half_of_even(twice)) * gamma_ratio(m, n, params);
}

double pq_beta_closed(int m, int n, const PqParams& params) {
  return scaled_pq_beta(m, n, params).to_real(params);
}

double pq_beta_commutative(int m, int n, const PqParams& params) {
  return scaled_pq_beta_commutative(m, n, params).to_real(params);
}

double pq_beta(int m, int n, const PqParams& params, BetaMode mode) {
  return mode == BetaMode::standard ? pq_beta_closed(m, n, params)
                                    : pq_beta_commutative(m, n, params);
}

double pq_beta_integral(int m, int n, const PqParams& params, const IntegrationPolicy& policy,
                        BetaMode mode) {
  require_positive(m, "pq_beta_integral");
  require_positive(n, "pq_beta_integral");
  const double p = params.p();
  const double q = params.q();
  // x^{m-1} (1 ⊖ qx)^{n-1} = x^{m-1} prod_{j<n-1} (p^j - q^{j+1} x)
  const auto integrand = [=](double x) {
    double value = std::pow(x, m - 1);
    double p_power = 1.0;
    double q_power = q;
    for (int j = 0; j < n - 1; ++j) {
      value *= p_power - q_power * x;
      p_power *= p;
      q_power *= q;
    }
    return value;
  };
  const double integral = pq_integral(integrand, 1.0, params, policy);
  if (mode == BetaMode::standard) return integral;
  const std::int64_t mm = m;
  return std::exp(static_cast<double>(mm * (mm - 1) / 2) * params.log_p()) * integral;
}

}  // namespace pqapprox
