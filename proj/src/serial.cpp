#include "pgt/serial.hpp"

#include <cmath>
#include <numbers>

#include "pgt/counting.hpp"
#include "pgt/quadforms.hpp"
#include "pgt/summation.hpp"

namespace pgt::serial {

double psi_gamma(double x) {
  NeumaierSum acc;
  for (i64 t = 3; trace_log_norm(t) <= std::log(x); ++t) {
    const i64 disc = t * t - 4;
    for (i64 u = 1; u * u <= disc; ++u) {
      if (disc % (u * u) != 0) continue;
      const i64 d = disc / (u * u);
      if (!is_discriminant(d)) continue;
      const FormClassSet fc = reduce_forms(d);
      acc.add(static_cast<double>(fc.class_number) * 2.0 * fc.regulator);
    }
  }
  return acc.value();
}

cplx average_sum(i64 X, double t) {
  NeumaierSum re, im;
  for (i64 n = 3; n <= X; ++n) {
    const cplx v = zagier_l(n * n - 4, cplx(0.5, t));
    re.add(v.real());
    im.add(v.imag());
  }
  return {re.value(), im.value()};
}

i64 bilinear_sum(i64 R, i64 A, i64 B) {
  i64 total = 0;
  for (i64 a = B + 1; a <= A + B; ++a)
    for (i64 r = R + 1; r <= 2 * R; ++r) total += kronecker(a * a - 4, r);
  return total;
}

i64 mean_value_F(const SumWindow& w) {
  i64 total = 0;
  for (i64 c = 1; c <= w.C; ++c) {
    const Factorization f = factorize(static_cast<u64>(c));
    for (i64 a = w.B + 1; a <= w.A + w.B; ++a) total += static_cast<i64>(rho_ca(f, a));
  }
  return total;
}

cplx mean_value_Fx(const SumWindow& w, double x, bool symmetric) {
  const i64 lo = symmetric ? w.B - w.A : w.B + 1;
  const i64 hi = symmetric ? w.B + w.A : w.B + w.A;
  NeumaierSum re, im;
  for (i64 a = lo; a <= hi; ++a) {
    const double arg = 2.0 * std::numbers::pi * static_cast<double>(w.B - a) * x;
    for (i64 c = w.C + 1; c <= 2 * w.C; ++c) {
      const double rho = static_cast<double>(rho_ca(static_cast<u64>(c), a));
      re.add(rho * std::cos(arg));
      im.add(rho * std::sin(arg));
    }
  }
  return {re.value(), im.value()};
}

cplx spectral_sum(const EigenvalueTable& table, double X, double T) {
  NeumaierSum re, im;
  const double log_x = std::log(X);
  for (double t : table.t_values) {
    if (t > T) break;
    const cplx v = std::exp(cplx(0.0, t * log_x)) + std::exp(cplx(0.0, -t * log_x));
    re.add(v.real());
    im.add(v.imag());
  }
  return {re.value(), im.value()};
}

}  // namespace pgt::serial
