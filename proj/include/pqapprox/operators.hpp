#pragma once

// (p,q)-Bernstein, (p,q)-Bernstein-Durrmeyer and King-modified operators.
//
// The Durrmeyer weight p^{-(n-k+1)(n+k)/2} b_{n,k}(1,x) is astronomically
// large times astronomically small for p < 1 and moderate n. Every such
// product is assembled as a ScaledPqValue, so the integer powers of p cancel
// exactly before anything is exponentiated.

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "pqapprox/function_spec.hpp"
#include "pqapprox/pq_calculus.hpp"
#include "pqapprox/pq_core.hpp"

namespace pqapprox {

enum class OperatorKind { bernstein, durrmeyer, king_durrmeyer };

std::string_view to_string(OperatorKind kind);
/// Accepts "bernstein", "durrmeyer", "king_durrmeyer" (alias "king").
OperatorKind parse_operator_kind(std::string_view name);

/// How the Durrmeyer inner integrals are obtained. `automatic` uses the Beta
/// closed form for polynomials and the series for everything else.
enum class IntegralBackend { automatic, closed_form, series };

/// b_{n,k}(1,x) = [n k] p^{(k(k-1) - n(n-1))/2} x^k (1 ⊖ x)^{n-k}.
SignedLogValue bernstein_basis(int n, int k, double x, const PqParams& params);
/// All of b_{n,0}(1,x) ... b_{n,n}(1,x) in O(n).
std::vector<SignedLogValue> bernstein_basis_all(int n, double x, const PqParams& params,
                                                const PqLogTable& table);

/// b_{n,k}(t) = [n k] t^k (1 ⊖ qt)^{n-k}; t >= 0.
double durrmeyer_kernel(int n, int k, double t, const PqParams& params);

/// Sampling nodes p^{n-k}[k]/[n], k = 0..n.
std::vector<double> bernstein_nodes(int n, const PqParams& params);

class BernsteinOperator {
 public:
  BernsteinOperator(const FunctionSpec& f, int n, const PqParams& params);

  double operator()(double x) const;
  int degree() const noexcept { return n_; }

 private:
  int n_;
  PqParams params_;
  PqLogTable table_;
  std::vector<double> samples_;
};

/// D_n(f,x) = [n+1] sum_{k=1}^n p^{-(n-k+1)(n+k)/2} b_{n,k}(1,x)
///            * integral_0^1 b_{n,k-1}(t) f(t) d_{p,q}t  +  b_{n,0}(1,x) f(0)
///
/// The x-independent part of each summand is computed once at construction
/// (`weights()[k]`), so evaluating many points costs O(n) each.
class DurrmeyerOperator {
 public:
  DurrmeyerOperator(const FunctionSpec& f, int n, const PqParams& params,
                    const IntegrationPolicy& policy = {},
                    IntegralBackend backend = IntegralBackend::automatic);

  double operator()(double x) const;
  int degree() const noexcept { return n_; }
  const PqParams& params() const noexcept { return params_; }
  /// weights()[0] = f(0); weights()[k] = [n+1] p^{-(n-k+1)(n+k)/2} * inner integral.
  std::span<const double> weights() const noexcept { return weights_; }

 private:
  double closed_form_weight(const FunctionSpec& f, int k) const;
  double series_weight(const FunctionSpec& f, int k, const IntegrationPolicy& policy) const;

  int n_;
  PqParams params_;
  PqLogTable table_;
  std::vector<double> weights_;
};

/// r_n(x) = [n+2] x / (p [n]).
double king_argument(int n, double x, const PqParams& params);
/// Right end of the evaluation interval [0, [n+2]/(p[n])].
double king_interval_end(int n, const PqParams& params);
/// Right end of [0, p[n]/[n+2]], where r_n(x) <= 1 and all weights stay nonnegative.
double king_positivity_end(int n, const PqParams& params);

/// D*_n(f,x) = D_n(f, r_n(x)); reproduces e0 and e1. Any x >= 0 is accepted,
/// signs of the basis are tracked beyond the positivity interval.
class KingOperator {
 public:
  KingOperator(const FunctionSpec& f, int n, const PqParams& params,
               const IntegrationPolicy& policy = {},
               IntegralBackend backend = IntegralBackend::automatic);

  double operator()(double x) const;
  int degree() const noexcept { return inner_.degree(); }

 private:
  DurrmeyerOperator inner_;
};

/// Type-erased operator of any kind, for experiment drivers.
class ApproximationOperator {
 public:
  ApproximationOperator(OperatorKind kind, const FunctionSpec& f, int n, const PqParams& params,
                        const IntegrationPolicy& policy = {});

  double operator()(double x) const;
  OperatorKind kind() const noexcept { return kind_; }
  int degree() const noexcept { return n_; }

 private:
  OperatorKind kind_;
  int n_;
  std::variant<BernsteinOperator, DurrmeyerOperator, KingOperator> impl_;
};

double bernstein_apply(const FunctionSpec& f, int n, double x, const PqParams& params);
double durrmeyer_apply(const FunctionSpec& f, int n, double x, const PqParams& params,
                       const IntegrationPolicy& policy = {},
                       IntegralBackend backend = IntegralBackend::automatic);
double king_apply(const FunctionSpec& f, int n, double x, const PqParams& params,
                  const IntegrationPolicy& policy = {},
                  IntegralBackend backend = IntegralBackend::automatic);

}  // namespace pqapprox
