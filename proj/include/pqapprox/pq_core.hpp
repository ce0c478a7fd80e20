#pragma once

// Foundational (p,q)-arithmetic: numbers, factorials, binomials and the
// (p,q)-power basis. Anything with extreme dynamic range goes through
// SignedLogValue, or through ScaledPqValue when an exact integer power of p
// has to be carried until the very end.

#include <cstdint>
#include <vector>

namespace pqapprox {

/// The deformation parameters, 0 < q < p <= 1 with p - q >= kMinGap.
class PqParams {
 public:
  static constexpr double kMinGap = 1e-6;

  PqParams(double p, double q);

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  /// r = q / p, always in (0, 1).
  double ratio() const noexcept { return r_; }
  double log_p() const noexcept { return log_p_; }
  double log_ratio() const noexcept { return log_r_; }

  friend bool operator==(const PqParams& a, const PqParams& b) noexcept {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  double p_;
  double q_;
  double r_;
  double log_p_;
  double log_r_;
};

/// sign * exp(log_magnitude); log_magnitude is meaningless when sign == 0.
class SignedLogValue {
 public:
  constexpr SignedLogValue() noexcept = default;

  static SignedLogValue from_real(double v);
  static SignedLogValue from_log(int sign, double log_magnitude);
  static constexpr SignedLogValue one() noexcept { return SignedLogValue(1, 0.0); }

  int sign() const noexcept { return sign_; }
  double log_magnitude() const noexcept { return log_mag_; }
  bool is_zero() const noexcept { return sign_ == 0; }
  double to_real() const;

  SignedLogValue operator*(const SignedLogValue& o) const noexcept;
  SignedLogValue operator/(const SignedLogValue& o) const;
  SignedLogValue& operator*=(const SignedLogValue& o) noexcept { return *this = *this * o; }

  friend bool operator==(const SignedLogValue& a, const SignedLogValue& b) noexcept {
    if (a.sign_ == 0 || b.sign_ == 0) return a.sign_ == b.sign_;
    return a.sign_ == b.sign_ && a.log_mag_ == b.log_mag_;
  }

 private:
  constexpr SignedLogValue(int sign, double log_mag) noexcept : sign_(sign), log_mag_(log_mag) {}

  int sign_ = 0;
  double log_mag_ = 0.0;
};

/// sign * p^p_exponent * exp(log_rest). The power of p stays an exact integer
/// so that huge and tiny p-powers cancel before anything is exponentiated.
struct ScaledPqValue {
  int sign = 1;
  std::int64_t p_exponent = 0;
  double log_rest = 0.0;

  static ScaledPqValue zero() noexcept { return {0, 0, 0.0}; }
  static ScaledPqValue p_power(std::int64_t e) noexcept { return {1, e, 0.0}; }

  ScaledPqValue& operator*=(const ScaledPqValue& o) noexcept;
  ScaledPqValue& operator/=(const ScaledPqValue& o);
  friend ScaledPqValue operator*(ScaledPqValue a, const ScaledPqValue& b) noexcept { return a *= b; }
  friend ScaledPqValue operator/(ScaledPqValue a, const ScaledPqValue& b) { return a /= b; }

  /// Multiplies by a real factor (sign and log of |v| are absorbed into log_rest).
  ScaledPqValue& absorb(double v) noexcept;

  SignedLogValue resolve(const PqParams& params) const;
  double to_real(const PqParams& params) const { return resolve(params).to_real(); }
};

/// 1 - r^j computed without cancellation, r = q/p.
double one_minus_ratio_power(std::int64_t j, const PqParams& params);

/// [n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}, Horner summation.
double pq_number(int n, const PqParams& params);
/// [n]_{p,q} / p^{n-1} = 1 + r + ... + r^{n-1}.
double normalized_pq_number(int n, const PqParams& params);
ScaledPqValue scaled_pq_number(int n, const PqParams& params);

double pq_factorial(int n, const PqParams& params);
SignedLogValue log_pq_factorial(int n, const PqParams& params);
ScaledPqValue scaled_pq_factorial(int n, const PqParams& params);

/// Throws DomainError unless 0 <= k <= n.
double pq_binomial(int n, int k, const PqParams& params);
SignedLogValue log_pq_binomial(int n, int k, const PqParams& params);

/// (x ⊖ a)^n_{p,q} = (x - a)(p x - q a) ... (p^{n-1} x - q^{n-1} a), sign exact.
SignedLogValue pq_power_basis(double x, double a, int n, const PqParams& params);
/// Same product with the p^{n(n-1)/2} factor kept as an integer exponent.
ScaledPqValue scaled_power_basis(double x, double a, int n, const PqParams& params);

/// Cumulative log-normalized (p,q)-numbers for repeated factorial and
/// binomial evaluation up to a fixed index.
class PqLogTable {
 public:
  PqLogTable(int n_max, const PqParams& params);

  int n_max() const noexcept { return static_cast<int>(cumulative_.size()) - 1; }
  ScaledPqValue factorial(int n) const;
  ScaledPqValue binomial(int n, int k) const;
  /// log([k] / p^{k-1}) for k >= 1.
  double log_normalized_number(int k) const;

 private:
  std::vector<double> log_normalized_;
  std::vector<double> cumulative_;
};

}  // namespace pqapprox
