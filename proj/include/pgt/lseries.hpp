#pragma once

#include "pgt/arith.hpp"

namespace pgt {

// Conductors above this go through the incomplete-gamma (theta) expansion
// instead of the Hurwitz decomposition, whose cost is linear in |D|.
inline constexpr i64 kHurwitzConductorLimit = 2000;

// L(s, chi_D) for a fundamental discriminant D; D = 1 gives zeta(s).
cplx dirichlet_l(i64 d_fund, cplx s);
// |D|^{-s} sum_{a=1}^{|D|} chi_D(a) zeta(s, a/|D|)
cplx dirichlet_l_hurwitz(i64 d_fund, cplx s);
// Lambda(s) = sum_n chi_D(n) n^k [x^{-(s+k)/2} Gamma((s+k)/2, x) + x^{-(1-s+k)/2} Gamma((1-s+k)/2, x)],
// x = pi n^2 / |D|, k = 0 for D > 0 and 1 for D < 0. Requires D != 1, |Im s| <= 10.
cplx dirichlet_l_theta(i64 d_fund, cplx s);

// T_ell^{(D)}(s) = sum_{l1 l2 = ell} mu(l1) chi_D(l1) tau_s(l2) / sqrt(l1)
cplx t_ell_factor(i64 d_fund, i64 ell, cplx s);

struct ZagierEvaluation {
  i64 delta;
  cplx s;
  cplx value;
  cplx correction_factor;  // T_ell^{(D)}(s); 1 when ell = 1
};

// L(s, delta): zeta(2s - 1) for delta = 0, ell^{1/2-s} T_ell(s) L(s, chi_D)
// otherwise. The series has no nonzero coefficients when delta = 2, 3 (mod 4),
// so those discriminants evaluate to 0.
ZagierEvaluation zagier_evaluate(i64 delta, cplx s);
cplx zagier_l(i64 delta, cplx s);

// Lambda(s, delta) = (pi/|delta|)^{-s/2} Gamma(s/2 + 1/4 - sgn(delta)/4) L(s, delta)
cplx completed_zagier(i64 delta, cplx s);

// The density m_t(x) for averages of L(1/2 + it, n^2 - 4); x > 2.
// t == 0 selects the logarithmic branch exactly.
cplx density_m(double t, double x);

struct AverageResult {
  cplx sum;
  cplx integral;
  double residual;
};

// sum_{3<=n<=X} L(1/2 + it, n^2 - 4) against int_3^X m_t(x) dx.
AverageResult average_central_values(i64 X, double t);

}  // namespace pgt
