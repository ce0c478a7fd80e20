#pragma once

// Brute-force reference implementations. Each one follows the defining
// formula literally in long double (direct sums, explicit powers, no
// normalization by r = q/p) so it shares no code path with the library.

#include <cmath>
#include <functional>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

namespace oracle {

using Real = long double;
using Fn = std::function<Real(Real)>;

inline Real number(int n, Real p, Real q) {
  Real sum = 0;
  for (int i = 0; i < n; ++i) sum += std::pow(p, n - 1 - i) * std::pow(q, i);
  return sum;
}

inline Real factorial(int n, Real p, Real q) {
  Real prod = 1;
  for (int i = 1; i <= n; ++i) prod *= number(i, p, q);
  return prod;
}

inline Real binomial(int n, int k, Real p, Real q) {
  return factorial(n, p, q) / (factorial(k, p, q) * factorial(n - k, p, q));
}

/// (x ⊖ a)^n = prod_{j<n} (p^j x - q^j a)
inline Real power_basis(Real x, Real a, int n, Real p, Real q) {
  Real prod = 1;
  for (int j = 0; j < n; ++j) prod *= std::pow(p, j) * x - std::pow(q, j) * a;
  return prod;
}

inline Real derivative(const Fn& f, Real x, Real p, Real q) {
  return (f(p * x) - f(q * x)) / ((p - q) * x);
}

/// Direct summation of the (p,q)-integral with powl nodes, stopped once q^k/p^k < 1e-24.
inline Real integral(const Fn& f, Real a, Real p, Real q, long max_terms = 2000000) {
  Real sum = 0;
  for (long k = 0; k < max_terms; ++k) {
    const Real ratio = std::pow(q / p, static_cast<Real>(k));
    const Real weight = ratio / p;
    sum += weight * f(weight * a);
    if (ratio < 1e-24L) break;
  }
  return (p - q) * a * sum;
}

inline Real beta_integral(int m, int n, Real p, Real q) {
  return integral([&](Real x) { return std::pow(x, m - 1) * power_basis(1, q * x, n - 1, p, q); },
                  1, p, q);
}

/// b_{n,k}(1,x) = [n k] p^{(k(k-1) - n(n-1))/2} x^k (1 ⊖ x)^{n-k}
inline Real bernstein_basis(int n, int k, Real x, Real p, Real q) {
  return binomial(n, k, p, q) * std::pow(p, (k * (k - 1) - n * (n - 1)) / 2.0L) *
         std::pow(x, k) * power_basis(1, x, n - k, p, q);
}

/// b_{n,k}(t) = [n k] t^k (1 ⊖ qt)^{n-k}
inline Real durrmeyer_kernel(int n, int k, Real t, Real p, Real q) {
  return binomial(n, k, p, q) * std::pow(t, k) * power_basis(1, q * t, n - k, p, q);
}

inline Real bernstein_operator(const Fn& f, int n, Real x, Real p, Real q) {
  Real sum = 0;
  for (int k = 0; k <= n; ++k) {
    const Real node = std::pow(p, n - k) * number(k, p, q) / number(n, p, q);
    sum += bernstein_basis(n, k, x, p, q) * f(node);
  }
  return sum;
}

/// The defining sum term by term, inner integrals by direct series summation.
inline Real durrmeyer_operator(const Fn& f, int n, Real x, Real p, Real q) {
  Real sum = bernstein_basis(n, 0, x, p, q) * f(0);
  for (int k = 1; k <= n; ++k) {
    const Real inner =
        integral([&](Real t) { return durrmeyer_kernel(n, k - 1, t, p, q) * f(t); }, 1, p, q);
    sum += number(n + 1, p, q) * std::pow(p, -(n - k + 1) * (n + k) / 2.0L) *
           bernstein_basis(n, k, x, p, q) * inner;
  }
  return sum;
}

inline Real classical_binomial(int n, int k) {
  Real c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

inline Real classical_basis(int n, int k, Real x) {
  return classical_binomial(n, k) * std::pow(x, k) * std::pow(1 - x, n - k);
}

inline Real gauss(const Fn& g) {
  return boost::math::quadrature::gauss<Real, 30>::integrate(g, Real(0), Real(1));
}

/// The defining sum with p = q = 1 and Riemann integrals (Gauss-Legendre):
/// (n+1) sum_{k=1}^n b_k(x) int b_{k-1} f + (1-x)^n f(0).
inline Real classical_durrmeyer(const Fn& f, int n, Real x) {
  Real sum = std::pow(1 - x, n) * f(0);
  for (int k = 1; k <= n; ++k) {
    sum += (n + 1) * classical_basis(n, k, x) *
           gauss([&](Real t) { return classical_basis(n, k - 1, t) * f(t); });
  }
  return sum;
}

/// The textbook Bernstein-Durrmeyer operator (n+1) sum_{k=0}^n b_k(x) int b_k f.
inline Real textbook_durrmeyer(const Fn& f, int n, Real x) {
  Real sum = 0;
  for (int k = 0; k <= n; ++k) {
    sum += (n + 1) * classical_basis(n, k, x) *
           gauss([&](Real t) { return classical_basis(n, k, t) * f(t); });
  }
  return sum;
}

/// sup over the lattice i/grid, j/grid <= delta of |f(x+h) - f(x)|, plain loops.
inline Real modulus(const Fn& f, Real delta, int grid) {
  Real best = 0;
  for (int j = 1; j <= grid && j <= delta * grid + 1e-9L; ++j)
    for (int i = 0; i + j <= grid; ++i)
      best = std::max(best, std::fabs(f(Real(i + j) / grid) - f(Real(i) / grid)));
  return best;
}

inline Real second_modulus(const Fn& f, Real delta, int grid) {
  Real best = 0;
  for (int j = 1; j <= grid && j <= delta * grid + 1e-9L; ++j)
    for (int i = 0; i + 2 * j <= grid; ++i)
      best = std::max(best, std::fabs(f(Real(i + 2 * j) / grid) - 2 * f(Real(i + j) / grid) +
                                      f(Real(i) / grid)));
  return best;
}

inline Real polynomial(const std::vector<double>& c, Real x) {
  Real sum = 0;
  for (std::size_t i = 0; i < c.size(); ++i) sum += c[i] * std::pow(x, static_cast<int>(i));
  return sum;
}

}  // namespace oracle
