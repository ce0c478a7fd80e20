#include "pqapprox/pq_core.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "pqapprox/errors.hpp"

namespace pqapprox {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) {
    std::ostringstream os;
    os << what << ": index must be nonnegative, got " << n;
    throw DomainError(os.str());
  }
}

void require_binomial_range(int n, int k) {
  require_nonnegative(n, "pq_binomial");
  if (k < 0 || k > n) {
    std::ostringstream os;
    os << "pq_binomial: k = " << k << " outside [0, " << n << "]";
    throw DomainError(os.str());
  }
}

std::int64_t triangular(std::int64_t n) { return n * (n - 1) / 2; }

// log(1 + r + ... + r^{k-1}) for k >= 1.
double log_normalized(std::int64_t k, const PqParams& params) {
  if (k == 1) return 0.0;
  return std::log(one_minus_ratio_power(k, params)) - std::log(one_minus_ratio_power(1, params));
}

double cumulative_log_normalized(int n, const PqParams& params) {
  double sum = 0.0;
  for (int k = 2; k <= n; ++k) sum += log_normalized(k, params);
  return sum;
}

}  // namespace

PqParams::PqParams(double p, double q) : p_(p), q_(q) {
  if (!std::isfinite(p) || !std::isfinite(q) || !(q > 0.0) || !(q < p) || !(p <= 1.0)) {
    std::ostringstream os;
    os << "PqParams: require 0 < q < p <= 1, got p = " << p << ", q = " << q;
    throw DomainError(os.str());
  }
  // 1 - 0.999999 is not exactly 1e-6 in binary; allow for that representation error.
  if (p - q < kMinGap * (1.0 - 1e-9)) {
    std::ostringstream os;
    os << "PqParams: p - q = " << (p - q) << " below the supported minimum " << kMinGap;
    throw DomainError(os.str());
  }
  r_ = q / p;
  log_p_ = std::log(p);
  log_r_ = std::log(r_);
}

SignedLogValue SignedLogValue::from_real(double v) {
  if (std::isnan(v)) throw DomainError("SignedLogValue: NaN has no sign/log representation");
  if (v == 0.0) return {};
  return {v > 0.0 ? 1 : -1, std::log(std::fabs(v))};
}

SignedLogValue SignedLogValue::from_log(int sign, double log_magnitude) {
  if (sign == 0) return {};
  return {sign > 0 ? 1 : -1, log_magnitude};
}

double SignedLogValue::to_real() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_mag_);
}

SignedLogValue SignedLogValue::operator*(const SignedLogValue& o) const noexcept {
  if (sign_ == 0 || o.sign_ == 0) return {};
  return {sign_ * o.sign_, log_mag_ + o.log_mag_};
}

SignedLogValue SignedLogValue::operator/(const SignedLogValue& o) const {
  if (o.sign_ == 0) throw DomainError("SignedLogValue: division by zero");
  if (sign_ == 0) return {};
  return {sign_ * o.sign_, log_mag_ - o.log_mag_};
}

ScaledPqValue& ScaledPqValue::operator*=(const ScaledPqValue& o) noexcept {
  if (sign == 0 || o.sign == 0) return *this = zero();
  sign *= o.sign;
  p_exponent += o.p_exponent;
  log_rest += o.log_rest;
  return *this;
}

ScaledPqValue& ScaledPqValue::operator/=(const ScaledPqValue& o) {
  if (o.sign == 0) throw DomainError("ScaledPqValue: division by zero");
  if (sign == 0) return *this;
  sign *= o.sign;
  p_exponent -= o.p_exponent;
  log_rest -= o.log_rest;
  return *this;
}

ScaledPqValue& ScaledPqValue::absorb(double v) noexcept {
  if (sign == 0) return *this;
  if (v == 0.0) return *this = zero();
  if (v < 0.0) sign = -sign;
  log_rest += std::log(std::fabs(v));
  return *this;
}

SignedLogValue ScaledPqValue::resolve(const PqParams& params) const {
  if (sign == 0) return {};
  const double log_p_part =
      p_exponent == 0 ? 0.0 : static_cast<double>(p_exponent) * params.log_p();
  return SignedLogValue::from_log(sign, log_p_part + log_rest);
}

double one_minus_ratio_power(std::int64_t j, const PqParams& params) {
  if (j == 0) return 0.0;
  return -std::expm1(static_cast<double>(j) * params.log_ratio());
}

double pq_number(int n, const PqParams& params) {
  require_nonnegative(n, "pq_number");
  double acc = 0.0;
  double q_power = 1.0;
  for (int i = 0; i < n; ++i) {
    acc = acc * params.p() + q_power;
    q_power *= params.q();
  }
  return acc;
}

double normalized_pq_number(int n, const PqParams& params) {
  require_nonnegative(n, "normalized_pq_number");
  if (n == 0) return 0.0;
  if (n == 1) return 1.0;
  return one_minus_ratio_power(n, params) / one_minus_ratio_power(1, params);
}

ScaledPqValue scaled_pq_number(int n, const PqParams& params) {
  require_nonnegative(n, "scaled_pq_number");
  if (n == 0) return ScaledPqValue::zero();
  return {1, n - 1, log_normalized(n, params)};
}

double pq_factorial(int n, const PqParams& params) {
  require_nonnegative(n, "pq_factorial");
  double prod = 1.0;
  for (int k = 1; k <= n; ++k) prod *= pq_number(k, params);
  return prod;
}

ScaledPqValue scaled_pq_factorial(int n, const PqParams& params) {
  require_nonnegative(n, "pq_factorial");
  return {1, triangular(n), cumulative_log_normalized(n, params)};
}

SignedLogValue log_pq_factorial(int n, const PqParams& params) {
  return scaled_pq_factorial(n, params).resolve(params);
}

SignedLogValue log_pq_binomial(int n, int k, const PqParams& params) {
  require_binomial_range(n, k);
  const double whole = cumulative_log_normalized(n, params);
  const double parts =
      cumulative_log_normalized(k, params) + cumulative_log_normalized(n - k, params);
  const ScaledPqValue value{1, static_cast<std::int64_t>(k) * (n - k), whole - parts};
  return value.resolve(params);
}

double pq_binomial(int n, int k, const PqParams& params) {
  return log_pq_binomial(n, k, params).to_real();
}

ScaledPqValue scaled_power_basis(double x, double a, int n, const PqParams& params) {
  require_nonnegative(n, "pq_power_basis");
  // p^j x - q^j a = p^j (x - r^j a)
  ScaledPqValue out{1, triangular(n), 0.0};
  double r_power = 1.0;
  for (int j = 0; j < n; ++j) {
    out.absorb(x - r_power * a);
    if (out.sign == 0) return out;
    r_power *= params.ratio();
  }
  return out;
}

SignedLogValue pq_power_basis(double x, double a, int n, const PqParams& params) {
  return scaled_power_basis(x, a, n, params).resolve(params);
}

PqLogTable::PqLogTable(int n_max, const PqParams& params) {
  require_nonnegative(n_max, "PqLogTable");
  log_normalized_.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  cumulative_.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int k = 1; k <= n_max; ++k) {
    log_normalized_[k] = log_normalized(k, params);
    // cumulative sum runs from k = 2 exactly like cumulative_log_normalized
    cumulative_[k] = k >= 2 ? cumulative_[k - 1] + log_normalized_[k] : 0.0;
  }
}

double PqLogTable::log_normalized_number(int k) const {
  if (k < 1 || k > n_max()) throw DomainError("PqLogTable: index out of range");
  return log_normalized_[k];
}

ScaledPqValue PqLogTable::factorial(int n) const {
  if (n < 0 || n > n_max()) throw DomainError("PqLogTable: factorial index out of range");
  return {1, triangular(n), cumulative_[n]};
}

ScaledPqValue PqLogTable::binomial(int n, int k) const {
  if (n > n_max()) throw DomainError("PqLogTable: binomial index out of range");
  require_binomial_range(n, k);
  return {1, static_cast<std::int64_t>(k) * (n - k),
          cumulative_[n] - (cumulative_[k] + cumulative_[n - k])};
}

}  // namespace pqapprox
