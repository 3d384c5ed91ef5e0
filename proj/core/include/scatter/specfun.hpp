#pragma once

#include "scatter/errors.hpp"
#include "scatter/jet.hpp"

namespace scatter {

/// Gamma function on the complex plane.
///
/// Lanczos-type rational approximation (g = 671/128, 14 terms) for Re z >= 1/2,
/// reflection elsewhere. Relative error is below 1e-13 on
/// 0.5 <= Re z <= 50, |Im z| <= 50. Throws PoleAtNonpositiveInteger within
/// 1e-14 of {0, -1, -2, ...}.
Cplx complex_gamma(Cplx z);

/// 1/Gamma(z); entire, exactly zero at the nonpositive integers.
Cplx reciprocal_gamma(Cplx z);

/// log Gamma(z) on some branch (only exp() of it is meaningful).
Cplx log_gamma(Cplx z);

/// sin(pi z) with exact zeros at integer z.
Cplx sin_pi(Cplx z);

/// Jacobi polynomial P_n^{(a,b)} evaluated on a jet argument.
///
/// Uses the three-term recurrence. When a recurrence denominator vanishes
/// (degenerate complex parameters such as n+a+b = 0), the explicit binomial
/// sum is used instead; both produce the same polynomial.
Jet jacobi_P(int n, Cplx a, Cplx b, const Jet& x);

/// Explicit-sum form of P_n^{(a,b)}; exposed for the recurrence fallback.
Jet jacobi_P_sum(int n, Cplx a, Cplx b, const Jet& x);

/// Generalized Laguerre polynomial L_n^{(a)} via the three-term recurrence.
Jet laguerre_L(int n, Cplx a, const Jet& x);

/// Generalized binomial coefficient C(z, m) for integer m >= 0.
Cplx binomial(Cplx z, int m);

}  // namespace scatter
