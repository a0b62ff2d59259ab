#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pgt/counting.hpp"
#include "pgt/errors.hpp"
#include "pgt/serial.hpp"
#include "pgt/sums.hpp"

using namespace pgt;

namespace {

constexpr double kPi = std::numbers::pi;

i64 brute_F(i64 A, i64 B, i64 C) {
  i64 acc = 0;
  for (i64 a = B + 1; a <= A + B; ++a)
    for (i64 c = 1; c <= C; ++c)
      for (i64 d = 0; d < c; ++d)
        if (floor_mod(d * d - a * d + 1, c) == 0) ++acc;
  return acc;
}

}  // namespace

TEST_CASE("char_partial_sum") {
  CHECK(char_partial_sum(5, 5) == 0);
  CHECK(char_partial_sum(1, 10) == 10);
  CHECK(char_partial_sum(-4, 4) == 0);
  CHECK(char_partial_sum(-4, 5) == 1);
  for (i64 d = -100; d <= 100; ++d) {
    if (d == 1 || d == 0 || !is_fundamental_discriminant(d)) continue;
    const i64 q = std::abs(d);
    for (i64 k = 1; k <= 5; ++k) REQUIRE(char_partial_sum(d, q * k) == 0);
    i64 acc = 0;
    for (i64 n = 1; n <= 3 * q + 7; ++n) {
      acc += kronecker(d, n);
      REQUIRE(char_partial_sum(d, n) == acc);
    }
  }
  CHECK_THROWS_AS(char_partial_sum(20, 10), precondition_error);
  CHECK_THROWS_AS(char_partial_sum(5, 200'000'000), precondition_error);
}

TEST_CASE("envelope_report exponents") {
  const auto r0 = envelope_report(5, 1000, 0.0);
  CHECK(r0.alpha == doctest::Approx(0.5));
  CHECK(r0.beta == 0.0);
  const auto r6 = envelope_report(5, 1000, 1.0 / 6.0);
  CHECK(std::abs(r6.alpha - 4.0 / 7.0) < 1e-15);
  CHECK(std::abs(r6.beta - 1.0 / 7.0) < 1e-15);
  CHECK(r6.sum == char_partial_sum(5, 1000));
  CHECK(r6.polya_vinogradov == doctest::Approx(std::sqrt(5.0) * std::log(5.0)));
  CHECK(r6.lindelof_envelope == doctest::Approx(std::sqrt(1000.0)));
  CHECK(r6.lemma_envelope == doctest::Approx(std::pow(1000.0, 4.0 / 7.0) * std::pow(5.0, 1.0 / 7.0)));
  const auto big = envelope_report(5, 1'000'000, 1.0 / 6.0);
  CHECK(std::abs(static_cast<double>(big.sum)) <= big.polya_vinogradov);
  CHECK_THROWS_AS(envelope_report(5, 10, 0.25), precondition_error);
}

TEST_CASE("bilinear_sum") {
  // r = 2, a = 3
  CHECK(bilinear_sum(1, 1, 2) == kronecker(5, 2));
  CHECK(bilinear_sum(1, 1, 3) == kronecker(12, 2));
  i64 brute = 0;
  for (i64 r = 6; r <= 10; ++r)
    for (i64 a = 4; a <= 6; ++a) brute += kronecker(a * a - 4, r);
  CHECK(bilinear_sum(5, 3, 3) == brute);
  const i64 cases[][3] = {{37, 50, 100}, {200, 300, -1000}, {1000, 64, 12345}};
  for (const auto& c : cases) CHECK(bilinear_sum(c[0], c[1], c[2]) == serial::bilinear_sum(c[0], c[1], c[2]));
  CHECK_THROWS_AS(bilinear_sum(20000, 1, 1), precondition_error);
}

TEST_CASE("mean_value_F") {
  const auto small = mean_value_F({2, 2, 2});
  CHECK(small.value == 3);
  CHECK(mean_value_F({1, 1, 1}).value == 1);
  CHECK(small.main_term == doctest::Approx(24.0 / (kPi * kPi)));
  CHECK(small.residual == doctest::Approx(3.0 - 24.0 / (kPi * kPi)));
  for (const SumWindow& w : {SumWindow{7, 3, 30}, SumWindow{40, -25, 17}, SumWindow{13, 1000, 41}})
    CHECK(mean_value_F(w).value == brute_F(w.A, w.B, w.C));
  for (auto w : {SumWindow{100, 10000, 50}, SumWindow{333, -77, 120}}) CHECK(mean_value_F(w).value == serial::mean_value_F(w));
  // shape of the error term: O(A + C^2) with a modest constant
  const auto mv = mean_value_F({100, 10000, 50});
  CHECK(std::abs(mv.residual) <= 2.0 * (100 + 50 * 50));
  CHECK_THROWS_AS(mean_value_F({0, 1, 1}), precondition_error);
  CHECK_THROWS_AS(mean_value_F({100000, 1, 10000}), precondition_error);
}

TEST_CASE("mean_value_Fx") {
  // brute force (A, B, C, x) = (2, 10, 3, 0.1)
  cplx brute = 0.0;
  for (i64 c = 4; c <= 6; ++c)
    for (i64 a = 8; a <= 12; ++a) {
      const double arg = 2.0 * kPi * static_cast<double>(10 - a) * 0.1;
      brute += static_cast<double>(rho_ca(static_cast<u64>(c), a)) * cplx(std::cos(arg), std::sin(arg));
    }
  const auto r = mean_value_Fx({2, 10, 3}, 0.1);
  CHECK(std::abs(r.value - brute) < 1e-12);
  CHECK(r.main_term == doctest::Approx(18.0 * std::sin(0.4 * kPi) / (kPi * kPi * kPi * 0.1)));

  // x -> 0 limit of the main term
  const double limit = 12.0 * 2 * 3 / (kPi * kPi);
  CHECK(mean_value_Fx({2, 10, 3}, 0.0).main_term == doctest::Approx(limit));
  CHECK(mean_value_Fx({2, 10, 3}, 1e-9).main_term == doctest::Approx(limit).epsilon(1e-6));

  // at x = 0 both windows reduce to differences of F
  for (const SumWindow& w : {SumWindow{5, 20, 9}, SumWindow{30, -7, 25}, SumWindow{60, 1000, 40}}) {
    const i64 A = w.A, B = w.B, C = w.C;
    const cplx sym = mean_value_Fx({A, B, C}, 0.0).value;
    const i64 f_sym = mean_value_F({2 * A + 1, B - A - 1, 2 * C}).value - mean_value_F({2 * A + 1, B - A - 1, C}).value;
    CHECK(sym == cplx(static_cast<double>(f_sym), 0.0));
    const cplx one = mean_value_Fx({A, B, C}, 0.0, false).value;
    const i64 f_one = mean_value_F({A, B, 2 * C}).value - mean_value_F({A, B, C}).value;
    CHECK(one == cplx(static_cast<double>(f_one), 0.0));
  }
  // window cardinality: with C = 1 (c = 2) and a full period of ones weighted by rho
  const SumWindow w{3, 0, 1};
  i64 card = 0;
  for (i64 a = -3; a <= 3; ++a) card += static_cast<i64>(rho_ca(2, a));
  CHECK(mean_value_Fx(w, 0.0).value.real() == static_cast<double>(card));

  const SumWindow wx{80, 5000, 60};
  for (bool symmetric : {true, false})
    CHECK(std::abs(mean_value_Fx(wx, 0.013, symmetric).value - serial::mean_value_Fx(wx, 0.013, symmetric)) < 1e-9);
}
