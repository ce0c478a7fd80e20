#pragma once

#include "pqapprox/pq_calculus.hpp"
#include "pqapprox/pq_core.hpp"

namespace pqapprox {

/// standard:     B(m,n)  = integral_0^1 x^{m-1} (1 ⊖ qx)^{n-1} d_{p,q}x
/// commutative:  B~(m,n) = the same integrand scaled by p^{m(m-1)/2}
enum class BetaMode { standard, commutative };

/// Gamma_{p,q}(n) = [n-1]_{p,q}!, integer n >= 1 only.
double pq_gamma(int n, const PqParams& params);
ScaledPqValue scaled_pq_gamma(int n, const PqParams& params);

/// B(m,n) = p^{(n-1)(2m+n-2)/2} Gamma(m) Gamma(n) / Gamma(m+n), evaluated in log form.
double pq_beta_closed(int m, int n, const PqParams& params);
ScaledPqValue scaled_pq_beta(int m, int n, const PqParams& params);

/// B~(m,n) = p^{(2mn+m^2+n^2-3m-3n+2)/2} Gamma(m) Gamma(n) / Gamma(m+n).
double pq_beta_commutative(int m, int n, const PqParams& params);
ScaledPqValue scaled_pq_beta_commutative(int m, int n, const PqParams& params);

double pq_beta(int m, int n, const PqParams& params, BetaMode mode);

/// Series evaluation of the Beta integral; the independent route to the closed forms.
double pq_beta_integral(int m, int n, const PqParams& params,
                        const IntegrationPolicy& policy = {},
                        BetaMode mode = BetaMode::standard);

}  // namespace pqapprox
