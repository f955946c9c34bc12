#pragma once

#include <subexp/numeric.hpp>

// Special functions at working precision. Real-argument only.
namespace subexp::specfun
{

Real pi();

// Euler-Mascheroni constant, lim (H_n - log n). Stored to 45 digits.
Real euler_gamma();

// log A, A the Glaisher-Kinkelin constant: log A = 1/12 - zeta'(-1). Stored to 45 digits.
Real log_glaisher();

// Exact Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(unsigned n);

// Riemann zeta for -20 <= s <= 40, |s - 1| >= 1e-9.
// s > 0 uses Borwein's alternating-series acceleration, s <= 0 the functional equation.
Real riemann_zeta(const Real &s);

// Closed forms at s = 0 and s = -1 only.
Real riemann_zeta_deriv(const Real &s);

// Central difference (step 1e-8 at doubled precision). Accurate to about 1e-8.
Real riemann_zeta_deriv_numeric(const Real &s);

// Hurwitz zeta for -10 <= s <= 40, s != 1, 0 < q <= 1, via Euler-Maclaurin summation.
Real hurwitz_zeta(const Real &s, const Real &q);

// d/ds zeta(s, q) at s = 0, by Lerch's formula log Gamma(q) - log(2 pi)/2.
Real hurwitz_zeta_deriv0(const Real &q);

// zeta(-m) = (-1)^m B_{m+1} / (m+1), exact.
Rational riemann_zeta_nonpositive_integer(unsigned m);

// zeta(-m, q) = -B_{m+1}(q) / (m+1), exact for rational q.
Rational hurwitz_zeta_nonpositive_integer(unsigned m, const Rational &q);

// log Gamma(x) for x > 0 (shifted Stirling series).
Real log_gamma(const Real &x);

} // namespace subexp::specfun
