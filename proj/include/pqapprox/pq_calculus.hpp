#pragma once

#include <cstddef>
#include <functional>

#include "pqapprox/pq_core.hpp"

namespace pqapprox {

using RealFunction = std::function<double(double)>;

/// Truncation control for the (p,q)-integral series.
struct IntegrationPolicy {
  double rel_tol = 1e-12;
  std::size_t max_terms = 20000;

  /// Throws DomainError unless rel_tol in (0, 1e-3] and max_terms >= 16.
  void validate() const;
};

/// D_{p,q} f(x) = (f(px) - f(qx)) / ((p - q) x). Throws DomainError at x = 0.
double pq_derivative(const RealFunction& f, double x, const PqParams& params);

/// Integral over [0, a] of f d_{p,q}x, a > 0:
///
///   (p - q) a * sum_k (q^k / p^{k+1}) f(q^k a / p^{k+1})
///
/// The first node is a / p, which lies beyond a whenever p < 1, so f must be
/// defined on [0, a/p]. Summation stops once three consecutive terms are at
/// most rel_tol times the running sum; otherwise ConvergenceError after
/// max_terms. Exceptions thrown by f propagate unchanged.
double pq_integral(const RealFunction& f, double a, const PqParams& params,
                   const IntegrationPolicy& policy = {});

/// Integral over [a, b] taken as the difference of the integrals over [0, b]
/// and [0, a]; 0 <= a <= b.
double pq_integral_between(const RealFunction& f, double a, double b, const PqParams& params,
                           const IntegrationPolicy& policy = {});

}  // namespace pqapprox
