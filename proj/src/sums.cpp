#include "pgt/sums.hpp"

#include <cmath>
#include <numbers>

#include "pgt/counting.hpp"
#include "pgt/errors.hpp"
#include "pgt/parallel.hpp"

namespace pgt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr i64 kMeanValueBudget = 100'000'000;

void check_window(const SumWindow& w) {
  if (w.A < 1) throw precondition_error("mean value: A must be at least 1");
  if (w.C < 1) throw precondition_error("mean value: C must be at least 1");
}

}  // namespace

i64 char_partial_sum(i64 d, i64 x) {
  if (!is_fundamental_discriminant(d)) throw precondition_error("char_partial_sum: D must be a fundamental discriminant");
  if (x < 0) throw precondition_error("char_partial_sum: x must be nonnegative");
  if (x > 100'000'000) throw precondition_error("char_partial_sum: x beyond 1e8");
  if (d == 1) return x;
  const i64 q = d < 0 ? -d : d;
  // prefix[k] = sum_{n=1}^{k} chi(n) over one period; the full period sums to 0
  std::vector<i64> prefix(static_cast<std::size_t>(q) + 1, 0);
  for (i64 n = 1; n <= q; ++n) prefix[n] = prefix[n - 1] + kronecker(d, n);
  return prefix[static_cast<std::size_t>(x % q)] + (x / q) * prefix[q];
}

CharSumEnvelopes envelope_report(i64 d, i64 x, double theta) {
  if (x < 1) throw precondition_error("envelope_report: x must be positive");
  if (!(theta >= 0.0 && theta < 0.25)) throw precondition_error("envelope_report: theta must lie in [0, 1/4)");
  const double alpha = 1.0 - 1.0 / (2.0 * (1.0 + theta));
  const double beta = theta / (1.0 + theta);
  const double ad = std::abs(static_cast<double>(d));
  const double xd = static_cast<double>(x);
  return {char_partial_sum(d, x), std::sqrt(ad) * std::log(ad), std::pow(xd, alpha) * std::pow(ad, beta),
          std::sqrt(xd), alpha, beta};
}

i64 bilinear_sum(i64 R, i64 A, i64 B) {
  if (R < 1 || A < 1) throw precondition_error("bilinear_sum: R and A must be positive");
  if (R > 10000 || A > 10000) throw precondition_error("bilinear_sum: R, A beyond desk scale (1e4)");
  const auto rows = par::map<i64>(static_cast<std::size_t>(R), [&](std::size_t i) {
    const i64 r = R + 1 + static_cast<i64>(i);
    i64 acc = 0;
    for (i64 a = B + 1; a <= A + B; ++a) acc += kronecker(a * a - 4, r);
    return acc;
  });
  i64 total = 0;
  for (i64 v : rows) total += v;
  return total;
}

MeanValue mean_value_F(const SumWindow& w) {
  check_window(w);
  if (w.A * w.C > kMeanValueBudget) throw precondition_error("mean_value_F: A*C exceeds the 1e8 work budget");
  const auto rows = par::map<i64>(static_cast<std::size_t>(w.C), [&](std::size_t i) {
    const u64 c = static_cast<u64>(i) + 1;
    const auto table = rho_residue_table(c);
    const i64 cc = static_cast<i64>(c);
    // a runs over B+1 .. A+B: whole periods plus a remainder
    const i64 full = w.A / cc;
    const i64 rem = w.A % cc;
    i64 period_total = 0;
    for (auto v : table) period_total += v;
    i64 acc = full * period_total;
    const i64 start = floor_mod(w.B + 1, cc);
    for (i64 k = 0; k < rem; ++k) acc += table[static_cast<std::size_t>((start + k) % cc)];
    return acc;
  });
  i64 value = 0;
  for (i64 v : rows) value += v;
  const double main = 6.0 / (kPi * kPi) * static_cast<double>(w.A) * static_cast<double>(w.C);
  return {value, main, static_cast<double>(value) - main};
}

TwistedMeanValue mean_value_Fx(const SumWindow& w, double x, bool symmetric) {
  check_window(w);
  const i64 a_count = symmetric ? 2 * w.A + 1 : w.A;
  if (a_count * w.C > kMeanValueBudget) throw precondition_error("mean_value_Fx: window exceeds the 1e8 work budget");
  const i64 a_lo = symmetric ? w.B - w.A : w.B + 1;
  // Phases e((B - a) x) are shared by every modulus.
  std::vector<cplx> phase(static_cast<std::size_t>(a_count));
  for (i64 k = 0; k < a_count; ++k) {
    const double arg = 2.0 * kPi * static_cast<double>(w.B - (a_lo + k)) * x;
    phase[static_cast<std::size_t>(k)] = {std::cos(arg), std::sin(arg)};
  }
  const cplx value = par::map_sum<cplx>(static_cast<std::size_t>(w.C), [&](std::size_t i) {
    const u64 c = static_cast<u64>(w.C) + 1 + i;
    const auto table = rho_residue_table(c);
    const i64 cc = static_cast<i64>(c);
    const i64 start = floor_mod(a_lo, cc);
    std::vector<cplx> terms;
    terms.reserve(static_cast<std::size_t>(a_count));
    for (i64 k = 0; k < a_count; ++k) {
      const auto rho = table[static_cast<std::size_t>((start + k) % cc)];
      if (rho != 0) terms.push_back(static_cast<double>(rho) * phase[static_cast<std::size_t>(k)]);
    }
    return par::pairwise_sum(terms);
  });
  const double main = x == 0.0 ? 12.0 * static_cast<double>(w.A) * static_cast<double>(w.C) / (kPi * kPi)
                               : 6.0 * static_cast<double>(w.C) * std::sin(2.0 * kPi * static_cast<double>(w.A) * x) /
                                     (kPi * kPi * kPi * x);
  return {value, main};
}

}  // namespace pgt
