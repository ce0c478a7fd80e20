#include "pqapprox/operators.hpp"

#include <cmath>
#include <sstream>

#include "pqapprox/errors.hpp"

namespace pqapprox {

namespace {

void require_degree(int n, const char* what) {
  if (n < 1) {
    std::ostringstream os;
    os << what << ": n must be a positive integer, got " << n;
    throw DomainError(os.str());
  }
}

void require_index(int n, int k, const char* what) {
  if (k < 0 || k > n) {
    std::ostringstream os;
    os << what << ": k = " << k << " outside [0, " << n << "]";
    throw DomainError(os.str());
  }
}

std::int64_t triangular(std::int64_t n) { return n * (n - 1) / 2; }

// B(m, n) = p^{(n-1)(2m+n-2)/2} [m-1]! [n-1]! / [m+n-1]!
ScaledPqValue beta_from_table(int m, int n, const PqLogTable& table) {
  const std::int64_t mm = m;
  const std::int64_t nn = n;
  return ScaledPqValue::p_power((nn - 1) * (2 * mm + nn - 2) / 2) * table.factorial(m - 1) *
         table.factorial(n - 1) / table.factorial(m + n - 1);
}

// [n+1] p^{-(n-k+1)(n+k)/2} [n choose k-1], shared by both backends.
ScaledPqValue durrmeyer_prefactor(int n, int k, const PqParams& params,
                                  const PqLogTable& table) {
  const std::int64_t nn = n;
  const std::int64_t kk = k;
  return scaled_pq_number(n + 1, params) *
         ScaledPqValue::p_power(-((nn - kk + 1) * (nn + kk)) / 2) * table.binomial(n, k - 1);
}

}  // namespace

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::bernstein:
      return "bernstein";
    case OperatorKind::durrmeyer:
      return "durrmeyer";
    case OperatorKind::king_durrmeyer:
      return "king_durrmeyer";
  }
  return "unknown";
}

OperatorKind parse_operator_kind(std::string_view name) {
  if (name == "bernstein") return OperatorKind::bernstein;
  if (name == "durrmeyer") return OperatorKind::durrmeyer;
  if (name == "king_durrmeyer" || name == "king") return OperatorKind::king_durrmeyer;
  throw ConfigError("unknown operator kind '" + std::string(name) + "'");
}

std::vector<SignedLogValue> bernstein_basis_all(int n, double x, const PqParams& params,
                                                const PqLogTable& table) {
  require_degree(n, "bernstein_basis");
  if (table.n_max() < n) throw DomainError("bernstein_basis: log table too small");

  // prefix products prod_{j<m} (1 - r^j x), m = 0..n, in sign/log form
  std::vector<int> prefix_sign(static_cast<std::size_t>(n) + 1, 1);
  std::vector<double> prefix_log(static_cast<std::size_t>(n) + 1, 0.0);
  double r_power = 1.0;
  for (int m = 1; m <= n; ++m) {
    const double factor = 1.0 - r_power * x;
    if (prefix_sign[m - 1] == 0 || factor == 0.0) {
      prefix_sign[m] = 0;
    } else {
      prefix_sign[m] = factor > 0.0 ? prefix_sign[m - 1] : -prefix_sign[m - 1];
      prefix_log[m] = prefix_log[m - 1] + std::log(std::fabs(factor));
    }
    r_power *= params.ratio();
  }

  const double log_abs_x = x != 0.0 ? std::log(std::fabs(x)) : 0.0;
  const std::int64_t nn = n;
  std::vector<SignedLogValue> out(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const std::int64_t kk = k;
    ScaledPqValue v = table.binomial(n, k);
    v *= ScaledPqValue::p_power((kk * (kk - 1) - nn * (nn - 1)) / 2);
    if (k > 0) {
      if (x == 0.0) continue;  // stays zero
      if (x < 0.0 && (k % 2 == 1)) v.sign = -v.sign;
      v.log_rest += static_cast<double>(k) * log_abs_x;
    }
    // (1 ⊖ x)^{n-k} = p^{(n-k)(n-k-1)/2} prod_{j<n-k} (1 - r^j x)
    v *= ScaledPqValue{prefix_sign[n - k], triangular(n - k), prefix_log[n - k]};
    out[k] = v.resolve(params);
  }
  return out;
}

SignedLogValue bernstein_basis(int n, int k, double x, const PqParams& params) {
  require_degree(n, "bernstein_basis");
  require_index(n, k, "bernstein_basis");
  const PqLogTable table(n, params);
  return bernstein_basis_all(n, x, params, table)[k];
}

double durrmeyer_kernel(int n, int k, double t, const PqParams& params) {
  require_degree(n, "durrmeyer_kernel");
  require_index(n, k, "durrmeyer_kernel");
  if (t < 0.0) throw DomainError("durrmeyer_kernel: t must be nonnegative");
  const PqLogTable table(n, params);
  ScaledPqValue v = table.binomial(n, k);
  if (k > 0) v.absorb(std::pow(t, k));
  v *= scaled_power_basis(1.0, params.q() * t, n - k, params);
  return v.to_real(params);
}

std::vector<double> bernstein_nodes(int n, const PqParams& params) {
  require_degree(n, "bernstein_nodes");
  // p^{n-k}[k]/[n] = (1 - r^k) / (1 - r^n)
  const double denom = one_minus_ratio_power(n, params);
  std::vector<double> nodes(static_cast<std::size_t>(n) + 1);
  for (int k = n; k >= 0; --k) nodes[k] = one_minus_ratio_power(k, params) / denom;
  return nodes;
}

BernsteinOperator::BernsteinOperator(const FunctionSpec& f, int n, const PqParams& params)
    : n_(n), params_(params), table_(n, params) {
  require_degree(n, "BernsteinOperator");
  const auto nodes = bernstein_nodes(n, params);
  samples_.reserve(nodes.size());
  for (double y : nodes) samples_.push_back(f(y));
}

double BernsteinOperator::operator()(double x) const {
  const auto basis = bernstein_basis_all(n_, x, params_, table_);
  double sum = 0.0;
  for (int k = 0; k <= n_; ++k) {
    if (!basis[k].is_zero()) sum += basis[k].to_real() * samples_[k];
  }
  return sum;
}

DurrmeyerOperator::DurrmeyerOperator(const FunctionSpec& f, int n, const PqParams& params,
                                     const IntegrationPolicy& policy, IntegralBackend backend)
    : n_(n),
      params_(params),
      table_(n + 2 + (f.is_polynomial() ? static_cast<int>(f.coefficients().size()) : 1),
             params) {
  require_degree(n, "DurrmeyerOperator");
  policy.validate();
  if (backend == IntegralBackend::automatic) {
    backend = f.is_polynomial() ? IntegralBackend::closed_form : IntegralBackend::series;
  }
  if (backend == IntegralBackend::closed_form && !f.is_polynomial()) {
    throw DomainError("DurrmeyerOperator: closed-form backend needs a polynomial");
  }
  if (backend == IntegralBackend::series) {
    f.require_domain({0.0, 1.0 / params.p()}, "durrmeyer_apply");
  }
  weights_.assign(static_cast<std::size_t>(n) + 1, 0.0);
  weights_[0] = f(0.0);
  for (int k = 1; k <= n; ++k) {
    weights_[k] = backend == IntegralBackend::closed_form ? closed_form_weight(f, k)
                                                          : series_weight(f, k, policy);
  }
}

double DurrmeyerOperator::closed_form_weight(const FunctionSpec& f, int k) const {
  // integral_0^1 b_{n,k-1}(t) t^j d_{p,q}t = [n choose k-1] B(k+j, n-k+2)
  const ScaledPqValue pre = durrmeyer_prefactor(n_, k, params_, table_);
  const auto& c = f.coefficients();
  double sum = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0.0) continue;
    const ScaledPqValue term = pre * beta_from_table(k + static_cast<int>(j), n_ - k + 2, table_);
    sum += term.to_real(params_) * c[j];
  }
  return sum;
}

double DurrmeyerOperator::series_weight(const FunctionSpec& f, int k,
                                        const IntegrationPolicy& policy) const {
  // b_{n,k-1}(t) = [n choose k-1] p^{(n-k+1)(n-k)/2 - (k-1)} * (pt)^{k-1} prod_{j=0}^{n-k} (1 - q r^j t)
  const std::int64_t spread = static_cast<std::int64_t>(n_ - k + 1) * (n_ - k) / 2 - (k - 1);
  const ScaledPqValue scale =
      durrmeyer_prefactor(n_, k, params_, table_) * ScaledPqValue::p_power(spread);
  const double p = params_.p();
  const double q = params_.q();
  const double r = params_.ratio();
  const int tail = n_ - k + 1;
  const auto integrand = [&](double t) {
    double v = std::pow(p * t, k - 1);
    double r_power = 1.0;
    for (int j = 0; j < tail; ++j) {
      v *= 1.0 - q * r_power * t;
      r_power *= r;
    }
    return v * f(t);
  };
  return scale.to_real(params_) * pq_integral(integrand, 1.0, params_, policy);
}

double DurrmeyerOperator::operator()(double x) const {
  const auto basis = bernstein_basis_all(n_, x, params_, table_);
  double sum = 0.0;
  for (int k = 0; k <= n_; ++k) {
    if (!basis[k].is_zero()) sum += basis[k].to_real() * weights_[k];
  }
  return sum;
}

double king_argument(int n, double x, const PqParams& params) {
  require_degree(n, "king_argument");
  // [n+2] / (p [n]) = p (1 - r^{n+2}) / (1 - r^n)
  return params.p() * one_minus_ratio_power(n + 2, params) / one_minus_ratio_power(n, params) * x;
}

double king_interval_end(int n, const PqParams& params) { return king_argument(n, 1.0, params); }

double king_positivity_end(int n, const PqParams& params) {
  require_degree(n, "king_positivity_end");
  return one_minus_ratio_power(n, params) /
         (params.p() * one_minus_ratio_power(n + 2, params));
}

KingOperator::KingOperator(const FunctionSpec& f, int n, const PqParams& params,
                           const IntegrationPolicy& policy, IntegralBackend backend)
    : inner_(f, n, params, policy, backend) {}

double KingOperator::operator()(double x) const {
  if (x < 0.0) throw DomainError("king operator: x must be nonnegative");
  return inner_(king_argument(inner_.degree(), x, inner_.params()));
}

namespace {

using OperatorImpl = std::variant<BernsteinOperator, DurrmeyerOperator, KingOperator>;

OperatorImpl make_impl(OperatorKind kind, const FunctionSpec& f, int n, const PqParams& params,
                       const IntegrationPolicy& policy) {
  switch (kind) {
    case OperatorKind::bernstein:
      return OperatorImpl(std::in_place_type<BernsteinOperator>, f, n, params);
    case OperatorKind::durrmeyer:
      return OperatorImpl(std::in_place_type<DurrmeyerOperator>, f, n, params, policy);
    case OperatorKind::king_durrmeyer:
      break;
  }
  return OperatorImpl(std::in_place_type<KingOperator>, f, n, params, policy);
}

}  // namespace

ApproximationOperator::ApproximationOperator(OperatorKind kind, const FunctionSpec& f, int n,
                                             const PqParams& params,
                                             const IntegrationPolicy& policy)
    : kind_(kind), n_(n), impl_(make_impl(kind, f, n, params, policy)) {}

double ApproximationOperator::operator()(double x) const {
  return std::visit([x](const auto& op) { return op(x); }, impl_);
}

double bernstein_apply(const FunctionSpec& f, int n, double x, const PqParams& params) {
  return BernsteinOperator(f, n, params)(x);
}

double durrmeyer_apply(const FunctionSpec& f, int n, double x, const PqParams& params,
                       const IntegrationPolicy& policy, IntegralBackend backend) {
  return DurrmeyerOperator(f, n, params, policy, backend)(x);
}

double king_apply(const FunctionSpec& f, int n, double x, const PqParams& params,
                  const IntegrationPolicy& policy, IntegralBackend backend) {
  return KingOperator(f, n, params, policy, backend)(x);
}

}  // namespace pqapprox
