#pragma once

#include <complex>

#include "pgt/arith.hpp"

namespace pgt {

inline constexpr double kEulerGamma = 0.57721566490153286061;

// Lanczos approximation (g = 7, 9 terms) in logarithmic form, with the
// reflection formula for Re(s) < 1/2. Relative error about 1e-14 for |s| <= 50.
cplx log_gamma(cplx s);
cplx gamma(cplx s);

// Euler-Maclaurin with 12 Bernoulli corrections, evaluated in long double.
// Valid for -5 <= Re(s) <= 10, |Im(s)| <= 100.
cplx zeta(cplx s);
cplx hurwitz_zeta(cplx s, double a);  // a in (0, 1]

// zeta'(3/2) by Richardson-extrapolated central differences; computed once.
double zeta_prime_three_halves();

// psi(x) = Gamma'(x) / Gamma(x) for real x > 0.
double digamma(double x);

// Upper incomplete gamma Gamma(z, x) for real x > 0: power series for small
// x, Lentz continued fraction otherwise.
cplx upper_incomplete_gamma(cplx z, double x);

}  // namespace pgt
