#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles/oracle_values.hpp"
#include "pgt/errors.hpp"
#include "pgt/special.hpp"

using namespace pgt;

namespace {

constexpr double kPi = std::numbers::pi;

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("gamma closed forms and oracle points") {
  CHECK(rel(gamma(cplx(1.0)), 1.0) < 1e-14);
  CHECK(rel(gamma(cplx(0.5)), std::sqrt(kPi)) < 1e-14);
  for (const auto& p : oracle::kGamma) {
    INFO("s = " << p.s);
    CHECK(rel(gamma(p.s), p.value) < 1e-10);
  }
  CHECK_THROWS_AS(gamma(cplx(0.0)), pole_error);
  CHECK_THROWS_AS(gamma(cplx(-3.0)), pole_error);
}

TEST_CASE("gamma recurrence on |s| <= 20") {
  for (double re = -19.75; re <= 19.0; re += 0.5)
    for (double im = -19.0; im <= 19.0; im += 1.3) {
      const cplx s(re, im);
      if (std::abs(s) > 20.0) continue;
      REQUIRE(rel(gamma(s + 1.0), s * gamma(s)) < 1e-10);
    }
}

TEST_CASE("zeta") {
  CHECK(rel(zeta(2.0), kPi * kPi / 6) < 1e-13);
  CHECK(rel(zeta(0.0), -0.5) < 1e-13);
  CHECK(rel(zeta(1.5), 2.6123753486854883) < 1e-12);
  for (const auto& p : oracle::kZeta) {
    INFO("s = " << p.s);
    // the oracle list contains a zero on the critical line
    CHECK(std::abs(zeta(p.s) - p.value) < 1e-10 * std::max(1.0, std::abs(p.value)));
  }
  CHECK_THROWS_AS(zeta(1.0), pole_error);
}

TEST_CASE("zeta(3/2) against partial sums with an integral tail") {
  // sum_{n<N} n^{-3/2} + 2/sqrt(N) + N^{-3/2}/2 + (3/24) N^{-5/2}
  const int N = 100000;
  double head = 0.0;
  for (int n = N - 1; n >= 1; --n) head += std::pow(n, -1.5);
  const double tail = 2.0 / std::sqrt(N) + 0.5 * std::pow(N, -1.5) + 0.125 * std::pow(N, -2.5);
  CHECK(std::abs(zeta(1.5).real() - (head + tail)) < 1e-11);
}

TEST_CASE("zeta functional equation in the critical strip") {
  int points = 0;
  for (double re = 0.05; re < 1.0; re += 0.1)
    for (double im = -45.0; im <= 45.0; im += 10.0) {
      const cplx s(re, im);
      const cplx rhs = std::pow(2.0, s) * std::pow(kPi, s - 1.0) * std::sin(kPi * s / 2.0) * gamma(1.0 - s) * zeta(1.0 - s);
      REQUIRE(std::abs(zeta(s) - rhs) < 1e-8);
      ++points;
    }
  CHECK(points == 100);
}

TEST_CASE("hurwitz zeta") {
  CHECK(rel(hurwitz_zeta({0.3, 4.0}, 1.0), zeta({0.3, 4.0})) < 1e-15);
  CHECK(rel(hurwitz_zeta(2.0, 0.5), kPi * kPi / 2) < 1e-13);
  for (const auto& p : oracle::kHurwitz) {
    INFO("s = " << p.s << " a = " << p.a);
    CHECK(rel(hurwitz_zeta(p.s, p.a), p.value) < 1e-10);
  }
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), pole_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), precondition_error);
  // sum_{a=1}^{q} zeta(s, a/q) = q^s zeta(s)
  for (int q = 1; q <= 12; ++q)
    for (cplx s : {cplx(0.5, 3.0), cplx(2.5, -1.0), cplx(-1.5, 7.0), cplx(0.9, 0.0)}) {
      cplx acc = 0.0;
      for (int a = 1; a <= q; ++a) acc += hurwitz_zeta(s, static_cast<double>(a) / q);
      const cplx want = std::pow(static_cast<double>(q), s) * zeta(s);
      REQUIRE(std::abs(acc - want) < 1e-8 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("zeta'(3/2)") {
  CHECK(std::abs(zeta_prime_three_halves() - oracle::kZetaPrimeThreeHalves) < 1e-10);
  // a plain central difference with step 1e-5 is good to about 1e-9
  const double h = 1e-5;
  const double plain = (zeta(1.5 + h) - zeta(1.5 - h)).real() / (2 * h);
  CHECK(std::abs(plain - oracle::kZetaPrimeThreeHalves) < 1e-8);
}

TEST_CASE("upper incomplete gamma") {
  for (const auto& p : oracle::kIncompleteGamma) {
    INFO("z = " << p.z << " x = " << p.x);
    CHECK(rel(upper_incomplete_gamma(p.z, p.x), p.value) < 1e-11);
  }
  // Gamma(1, x) = e^{-x}
  for (double x : {0.01, 0.7, 1.9, 2.1, 5.0, 30.0}) CHECK(rel(upper_incomplete_gamma(1.0, x), std::exp(-x)) < 1e-13);
}

TEST_CASE("digamma") {
  CHECK(std::abs(digamma(1.0) + kEulerGamma) < 1e-14);
  CHECK(std::abs(digamma(0.5) + kEulerGamma + 2 * std::log(2.0)) < 1e-14);
  for (double x : {0.01, 0.3, 2.7, 15.0}) CHECK(std::abs(digamma(x + 1) - digamma(x) - 1 / x) < 1e-12 * std::max(1.0, 1 / x));
  CHECK_THROWS_AS(digamma(0.0), precondition_error);
}

TEST_CASE("incomplete gamma at nonpositive integers") {
  // E1(1) and the recurrence Gamma(z+1, x) = z Gamma(z, x) + x^z e^{-x}
  CHECK(std::abs(upper_incomplete_gamma(0.0, 1.0) - 0.21938393439552027368) < 1e-14);
  for (double x : {0.001, 0.3, 1.2})
    for (int m = 0; m <= 3; ++m) {
      const double z = -m;
      const cplx lhs = upper_incomplete_gamma(z + 1.0, x);
      const cplx rhs = z * upper_incomplete_gamma(z, x) + std::pow(x, z) * std::exp(-x);
      CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
    }
}
