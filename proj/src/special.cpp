#include "pgt/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "pgt/errors.hpp"

namespace pgt {

namespace {

using ld = long double;
using cld = std::complex<long double>;

constexpr double kPi = std::numbers::pi;

constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
constexpr double kLanczosG = 7.0;

bool is_nonpositive_integer(cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

// B_{2k} / (2k)! for k = 1..12
constexpr std::array<ld, 12> bernoulli_over_factorial() {
  constexpr std::array<ld, 12> b{
      1.0L / 6,          -1.0L / 30,       1.0L / 42,          -1.0L / 30,
      5.0L / 66,         -691.0L / 2730,   7.0L / 6,           -3617.0L / 510,
      43867.0L / 798,    -174611.0L / 330, 854513.0L / 138,    -236364091.0L / 2730};
  std::array<ld, 12> out{};
  ld fact = 1;
  for (int k = 1; k <= 12; ++k) {
    fact *= static_cast<ld>((2 * k - 1) * (2 * k));
    out[k - 1] = b[k - 1] / fact;
  }
  return out;
}

const std::array<ld, 12> kBernoulli = bernoulli_over_factorial();

cld cpow(ld base, cld s) { return std::exp(-s * std::log(base)); }  // base^{-s}

}  // namespace

cplx log_gamma(cplx s) {
  if (is_nonpositive_integer(s)) throw pole_error("gamma: pole at nonpositive integer");
  if (s.real() < 0.5) {
    // log Gamma(s) = log pi - log sin(pi s) - log Gamma(1 - s)
    return std::log(kPi) - std::log(std::sin(kPi * s)) - log_gamma(1.0 - s);
  }
  const cplx z = s - 1.0;
  cplx acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

cplx gamma(cplx s) {
  if (is_nonpositive_integer(s)) throw pole_error("gamma: pole at nonpositive integer");
  if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * gamma(1.0 - s));
  return std::exp(log_gamma(s));
}

cplx hurwitz_zeta(cplx s_in, double a_in) {
  if (s_in == cplx(1.0, 0.0)) throw pole_error("zeta: pole at s = 1");
  if (!(a_in > 0.0 && a_in <= 1.0)) throw precondition_error("hurwitz_zeta: a must lie in (0, 1]");
  const cld s(s_in.real(), s_in.imag());
  const ld a = a_in;
  const int n_terms = static_cast<int>(std::ceil(0.7 * (std::abs(s_in) + 26.0))) + 5;

  cld head = 0;
  for (int n = 0; n < n_terms; ++n) head += cpow(n + a, s);

  const ld big = n_terms + a;
  const cld big_pow = cpow(big, s);  // (N+a)^{-s}
  cld tail = big_pow * big / (s - 1.0L) + big_pow / 2.0L;

  // sum_k B_{2k}/(2k)! * s (s+1) ... (s+2k-2) * (N+a)^{-s-2k+1}
  cld rising = s;
  cld power = big_pow / big;
  const ld inv_sq = 1.0L / (big * big);
  for (int k = 1; k <= 12; ++k) {
    tail += kBernoulli[k - 1] * rising * power;
    rising *= (s + static_cast<ld>(2 * k - 1)) * (s + static_cast<ld>(2 * k));
    power *= inv_sq;
  }
  const cld total = head + tail;
  return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

cplx zeta(cplx s) {
  // the direct sum cancels badly left of the critical strip
  if (s.real() < 0.0) {
    const cplx one_minus = 1.0 - s;
    return std::pow(2.0, s) * std::pow(kPi, -one_minus) * std::sin(kPi * s / 2.0) * gamma(one_minus) *
           hurwitz_zeta(one_minus, 1.0);
  }
  return hurwitz_zeta(s, 1.0);
}

double zeta_prime_three_halves() {
  static const double value = [] {
    auto diff = [](double h) { return (zeta(1.5 + h) - zeta(1.5 - h)).real() / (2.0 * h); };
    // Richardson table on h, h/2, h/4, ... ; error of D(h) is a series in h^2
    constexpr int kLevels = 5;
    double table[kLevels][kLevels];
    double h = 0.05;
    for (int i = 0; i < kLevels; ++i, h /= 2.0) {
      table[i][0] = diff(h);
      double factor = 4.0;
      for (int j = 1; j <= i; ++j, factor *= 4.0)
        table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
    }
    return table[kLevels - 1][kLevels - 1];
  }();
  return value;
}

double digamma(double x) {
  if (!(x > 0.0)) throw precondition_error("digamma: x must be positive");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ log x - 1/(2x) - sum_k B_{2k} / (2k x^{2k})
  constexpr double b[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
  const double inv2 = 1.0 / (x * x);
  double p = inv2, series = 0.0;
  for (int k = 1; k <= 6; ++k, p *= inv2) series += b[k - 1] / (2 * k) * p;
  return shift + std::log(x) - 0.5 / x - series;
}

cplx upper_incomplete_gamma(cplx z, double x) {
  if (!(x > 0.0)) throw precondition_error("upper_incomplete_gamma: x must be positive");
  constexpr int kMaxIter = 2000;
  constexpr double kEps = 1e-16;
  const cplx prefactor = std::exp(z * std::log(x) - x);
  if (x < 1.5 + 0.5 * std::abs(z) && z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    // Gamma(-m, x) = ((-1)^m / m!) [E1(x) - e^{-x} sum_{k<m} (-1)^k k! / x^{k+1}]
    const int m = static_cast<int>(-z.real());
    double e1 = -kEulerGamma - std::log(x), term = 1.0;
    for (int k = 1; k < kMaxIter; ++k) {
      term *= -x / k;
      e1 -= term / k;
      if (std::abs(term) < kEps * std::abs(e1)) break;
    }
    double finite = 0.0, fact = 1.0, xp = x;
    for (int k = 0; k < m; ++k) {
      finite += (k % 2 ? -fact : fact) / xp;
      fact *= k + 1;
      xp *= x;
    }
    double mfact = 1.0;
    for (int k = 2; k <= m; ++k) mfact *= k;
    return (m % 2 ? -1.0 : 1.0) / mfact * (e1 - std::exp(-x) * finite);
  }
  if (x < 1.5 + 0.5 * std::abs(z)) {
    // gamma(z, x) = x^z e^{-x} sum_n x^n / (z (z+1) ... (z+n))
    cplx term = 1.0 / z;
    cplx sum = term;
    for (int n = 1; n < kMaxIter; ++n) {
      term *= x / (z + static_cast<double>(n));
      sum += term;
      if (std::abs(term) < kEps * std::abs(sum)) break;
    }
    return gamma(z) - prefactor * sum;
  }
  // Modified Lentz on Gamma(z, x) = e^{-x} x^z / (x + 1 - z - 1(1-z)/(x + 3 - z - ...))
  constexpr double kTiny = 1e-300;
  cplx b = x + 1.0 - z;
  cplx c = 1.0 / kTiny;
  cplx d = 1.0 / b;
  cplx h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const cplx an = -static_cast<double>(i) * (static_cast<double>(i) - z);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const cplx delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return prefactor * h;
}

}  // namespace pgt
