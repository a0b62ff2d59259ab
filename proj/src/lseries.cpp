#include "pgt/lseries.hpp"

#include <cmath>
#include <numbers>

#include "pgt/errors.hpp"
#include "pgt/parallel.hpp"
#include "pgt/quadrature.hpp"
#include "pgt/special.hpp"

namespace pgt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThetaCutoff = 45.0;  // e^{-45} is below double resolution of the sum
constexpr double kThetaMaxImag = 10.0;

void require_fundamental(i64 d) {
  if (!is_fundamental_discriminant(d)) throw precondition_error("dirichlet_l: D must be a fundamental discriminant");
}

}  // namespace

cplx dirichlet_l_hurwitz(i64 d, cplx s) {
  require_fundamental(d);
  if (d == 1) return zeta(s);
  const i64 q = d < 0 ? -d : d;
  if (s == cplx(1.0, 0.0)) {
    // The poles of zeta(s, a/q) cancel since chi sums to 0 over a period:
    // L(1, chi) = -(1/q) sum_a chi(a) psi(a/q).
    double acc = 0.0;
    for (i64 a = 1; a < q; ++a) acc -= kronecker(d, a) * digamma(static_cast<double>(a) / static_cast<double>(q));
    return acc / static_cast<double>(q);
  }
  cplx acc = 0.0;
  for (i64 a = 1; a < q; ++a) {
    const int chi = kronecker(d, a);
    if (chi == 0) continue;
    const cplx z = hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(q));
    acc += chi > 0 ? z : -z;
  }
  return std::pow(static_cast<double>(q), -s) * acc;
}

cplx dirichlet_l_theta(i64 d, cplx s) {
  require_fundamental(d);
  if (d == 1) throw precondition_error("dirichlet_l_theta: needs a nonprincipal character");
  if (std::abs(s.imag()) > kThetaMaxImag) throw precondition_error("dirichlet_l_theta: |Im s| too large");
  const double q = static_cast<double>(d < 0 ? -d : d);
  const double k = d < 0 ? 1.0 : 0.0;
  const cplx w = 0.5 * (s + k);
  const cplx w_dual = 0.5 * (1.0 - s + k);
  // On the critical line the dual term is the conjugate of the direct one.
  const bool critical = std::abs(s.real() - 0.5) < 1e-15;
  const auto n_max = static_cast<i64>(std::sqrt(kThetaCutoff * q / kPi)) + 1;
  cplx acc = 0.0;
  for (i64 n = 1; n <= n_max; ++n) {
    const int chi = kronecker(d, n);
    if (chi == 0) continue;
    const double nd = static_cast<double>(n);
    const double x = kPi * nd * nd / q;
    const double log_x = std::log(x);
    const cplx direct = std::exp(-w * log_x) * upper_incomplete_gamma(w, x);
    const cplx dual = critical ? std::conj(direct) : std::exp(-w_dual * log_x) * upper_incomplete_gamma(w_dual, x);
    const cplx term = (k > 0 ? nd : 1.0) * (direct + dual);
    acc += chi > 0 ? term : -term;
  }
  const cplx norm = std::exp(w * std::log(q / kPi) + log_gamma(w));
  return acc / norm;
}

cplx dirichlet_l(i64 d, cplx s) {
  require_fundamental(d);
  if (d == 1) return zeta(s);
  const i64 q = d < 0 ? -d : d;
  if (q <= kHurwitzConductorLimit || std::abs(s.imag()) > kThetaMaxImag) return dirichlet_l_hurwitz(d, s);
  return dirichlet_l_theta(d, s);
}

cplx t_ell_factor(i64 d, i64 ell, cplx s) {
  if (ell < 1) throw precondition_error("t_ell_factor: ell must be positive");
  cplx acc = 0.0;
  for (u64 l1 : divisors(static_cast<u64>(ell))) {
    const int mu = mobius(l1);
    if (mu == 0) continue;
    const int chi = kronecker(d, static_cast<i64>(l1));
    if (chi == 0) continue;
    const u64 l2 = static_cast<u64>(ell) / l1;
    acc += static_cast<double>(mu * chi) * tau_s(l2, s) / std::sqrt(static_cast<double>(l1));
  }
  return acc;
}

ZagierEvaluation zagier_evaluate(i64 delta, cplx s) {
  if (delta == 0) return {0, s, zeta(2.0 * s - 1.0), 1.0};
  if (!is_discriminant(delta)) return {delta, s, 0.0, 0.0};
  const Discriminant disc = decompose_discriminant(delta);
  const cplx l = dirichlet_l(disc.d_fund, s);
  if (disc.ell == 1) return {delta, s, l, 1.0};
  const cplx t = t_ell_factor(disc.d_fund, disc.ell, s);
  const cplx value = std::pow(static_cast<double>(disc.ell), 0.5 - s) * t * l;
  return {delta, s, value, t};
}

cplx zagier_l(i64 delta, cplx s) { return zagier_evaluate(delta, s).value; }

cplx completed_zagier(i64 delta, cplx s) {
  if (delta == 0) throw precondition_error("completed_zagier: delta must be nonzero");
  const double sgn = delta > 0 ? 1.0 : -1.0;
  const double ad = std::abs(static_cast<double>(delta));
  const cplx shift = 0.5 * s + 0.25 - 0.25 * sgn;
  return std::exp(-0.5 * s * std::log(kPi / ad)) * gamma(shift) * zagier_l(delta, s);
}

cplx density_m(double t, double x) {
  if (!(x > 2.0)) throw precondition_error("density_m: x must exceed 2");
  const double y = x * x - 4.0;
  if (t == 0.0) {
    const double z32 = zeta(1.5).real();
    const double zp = zeta_prime_three_halves();
    return (std::log(y) - kPi / 2 + 3 * kEulerGamma - 2 * zp / z32 - std::log(8 * kPi)) / (2 * z32);
  }
  const cplx it(0.0, t);
  const cplx first = zeta(1.0 + 2.0 * it) / zeta(1.5 + it);
  const cplx second = std::pow(2.0, 0.5 + it) * std::sin(kPi / 4 + it * (kPi / 2)) * std::pow(kPi, -it) *
                      zeta(it) / zeta(1.5 - it) * gamma(it) * std::pow(y, -it);
  return first + second;
}

AverageResult average_central_values(i64 X, double t) {
  if (X < 3) throw precondition_error("average_central_values: X must be at least 3");
  if (X > 10000) throw precondition_error("average_central_values: X beyond desk scale (1e4)");
  if (std::abs(t) > 2.0) throw precondition_error("average_central_values: |t| must be at most 2");
  const cplx s(0.5, t);
  const auto count = static_cast<std::size_t>(X - 2);
  const cplx sum = par::map_sum<cplx>(count, [&](std::size_t i) {
    const i64 n = static_cast<i64>(i) + 3;
    return zagier_l(n * n - 4, s);
  });
  const cplx integral = adaptive_simpson<cplx>([t](double x) { return density_m(t, x); }, 3.0,
                                               static_cast<double>(X), 1e-7);
  return {sum, integral, std::abs(sum - integral)};
}

}  // namespace pgt
