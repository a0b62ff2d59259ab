#pragma once

#include <cmath>
#include <stdexcept>

namespace pgt {

namespace detail {

template <class F, class V>
V simpson_step(F& f, double a, double b, V fa, V fm, V fb, V whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const V flm = f(lm);
  const V frm = f(rm);
  const V left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const V right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const V diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction. V is double or std::complex<double>.
// The interval is first cut into `pieces` equal panels so oscillating
// integrands are not sampled too coarsely at the top level.
template <class V, class F>
V adaptive_simpson(F f, double a, double b, double abs_tol, int pieces = 16, int max_depth = 40) {
  if (b == a) return V{};
  V total{};
  const double h = (b - a) / pieces;
  for (int i = 0; i < pieces; ++i) {
    const double lo = a + i * h;
    const double hi = (i + 1 == pieces) ? b : lo + h;
    const V flo = f(lo);
    const V fhi = f(hi);
    const V fm = f(0.5 * (lo + hi));
    const V whole = (hi - lo) / 6.0 * (flo + 4.0 * fm + fhi);
    total += detail::simpson_step(f, lo, hi, flo, fm, fhi, whole, abs_tol / pieces, max_depth);
  }
  return total;
}

}  // namespace pgt
