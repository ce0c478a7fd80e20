#include "pqapprox/pq_calculus.hpp"

#include <cmath>
#include <sstream>

#include "pqapprox/errors.hpp"

namespace pqapprox {

void IntegrationPolicy::validate() const {
  if (!(rel_tol > 0.0) || rel_tol > 1e-3) {
    std::ostringstream os;
    os << "IntegrationPolicy: rel_tol must lie in (0, 1e-3], got " << rel_tol;
    throw DomainError(os.str());
  }
  if (max_terms < 16) throw DomainError("IntegrationPolicy: max_terms must be at least 16");
}

double pq_derivative(const RealFunction& f, double x, const PqParams& params) {
  if (x == 0.0) throw DomainError("pq_derivative: undefined at x = 0");
  return (f(params.p() * x) - f(params.q() * x)) / ((params.p() - params.q()) * x);
}

double pq_integral(const RealFunction& f, double a, const PqParams& params,
                   const IntegrationPolicy& policy) {
  policy.validate();
  if (!(a > 0.0) || !std::isfinite(a)) {
    std::ostringstream os;
    os << "pq_integral: upper limit must be positive, got " << a;
    throw DomainError(os.str());
  }
  constexpr int kQuietTermsRequired = 3;
  const double r = params.ratio();
  // weight_k = r^k / p, node_k = weight_k * a
  double weight = 1.0 / params.p();
  double sum = 0.0;
  int quiet = 0;
  for (std::size_t k = 0; k < policy.max_terms; ++k) {
    const double term = weight * f(weight * a);
    sum += term;
    if (std::fabs(term) <= policy.rel_tol * std::fabs(sum)) {
      if (++quiet == kQuietTermsRequired) return (params.p() - params.q()) * a * sum;
    } else {
      quiet = 0;
    }
    weight *= r;
  }
  const double partial = (params.p() - params.q()) * a * sum;
  std::ostringstream os;
  os << "pq_integral: no convergence to rel_tol " << policy.rel_tol << " within "
     << policy.max_terms << " terms (partial sum " << partial << ")";
  throw ConvergenceError(os.str(), partial, policy.max_terms);
}

double pq_integral_between(const RealFunction& f, double a, double b, const PqParams& params,
                           const IntegrationPolicy& policy) {
  if (!(a >= 0.0) || !(b >= a)) throw DomainError("pq_integral_between: need 0 <= a <= b");
  const double upper = b > 0.0 ? pq_integral(f, b, params, policy) : 0.0;
  const double lower = a > 0.0 ? pq_integral(f, a, params, policy) : 0.0;
  return upper - lower;
}

}  // namespace pqapprox
