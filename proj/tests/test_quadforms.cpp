#include <doctest.h>

#include <cmath>
#include <numeric>

#include "pgt/errors.hpp"
#include "pgt/lseries.hpp"
#include "pgt/quadforms.hpp"
#include "pgt/serial.hpp"

using namespace pgt;

namespace {

const double kLogGolden2 = 2.0 * std::log((3.0 + std::sqrt(5.0)) / 2.0);

bool pell_holds(const PellSolution& p, i64 delta) {
  return p.t * p.t - bigint(delta) * p.u * p.u == 4 && p.t > 0 && p.u > 0;
}

}  // namespace

TEST_CASE("reduce_forms small discriminants") {
  const auto f5 = reduce_forms(5);
  CHECK(f5.class_number == 1);
  CHECK(f5.pell.t == 3);
  CHECK(f5.pell.u == 1);
  CHECK(f5.fundamental_unit == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-14));
  CHECK(f5.regulator == doctest::Approx(std::log((3.0 + std::sqrt(5.0)) / 2.0)).epsilon(1e-14));

  const auto f12 = reduce_forms(12);
  CHECK(f12.pell.t == 4);
  CHECK(f12.pell.u == 1);
  CHECK(f12.class_number == 2);  // x^2 - 3y^2 and -x^2 + 3y^2

  CHECK(reduce_forms(221).class_number >= 2);

  CHECK_THROWS_AS(reduce_forms(16), precondition_error);
  CHECK_THROWS_AS(reduce_forms(-4), precondition_error);
  CHECK_THROWS_AS(reduce_forms(7), precondition_error);
}

TEST_CASE("reduced forms satisfy the invariants and cycles close") {
  for (i64 d = 5; d <= 3000; ++d) {
    if (!is_discriminant(d) || is_square(static_cast<u64>(d))) continue;
    const auto set = reduce_forms(d);
    const double r = std::sqrt(static_cast<double>(d));
    REQUIRE(set.class_number == static_cast<i64>(set.cycle_starts.size()));
    REQUIRE(set.class_number >= 1);
    REQUIRE(set.fundamental_unit > 1.0);
    REQUIRE(pell_holds(set.pell, d));
    for (const Form& f : set.reduced_forms) {
      REQUIRE(f.b * f.b - 4 * f.a * f.c == d);
      REQUIRE(std::gcd(std::gcd(std::abs(f.a), std::abs(f.b)), std::abs(f.c)) == 1);
      REQUIRE(f.b > 0);
      REQUIRE(f.b < r);
      REQUIRE(r - f.b < 2.0 * std::abs(f.a));
      REQUIRE(2.0 * std::abs(f.a) < r + f.b);
    }
    for (std::size_t c = 0; c < set.cycle_starts.size(); ++c) {
      const std::size_t begin = set.cycle_starts[c];
      const std::size_t end = c + 1 < set.cycle_starts.size() ? set.cycle_starts[c + 1] : set.reduced_forms.size();
      for (std::size_t i = begin; i < end; ++i) {
        const Form next = reduction_step(set.reduced_forms[i], d);
        REQUIRE(next == set.reduced_forms[i + 1 < end ? i + 1 : begin]);
      }
    }
  }
}

TEST_CASE("class number formula h+ log eps+ = sqrt(d) L(1, chi_d)") {
  for (i64 d = 5; d <= 2000; ++d) {
    if (!is_fundamental_discriminant(d)) continue;
    const auto set = reduce_forms(d);
    const double lhs = static_cast<double>(set.class_number) * set.regulator;
    const double rhs = std::sqrt(static_cast<double>(d)) * dirichlet_l(d, 1.0).real();
    INFO("d = " << d);
    REQUIRE(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("trace weights match sqrt(t^2 - 4) L(1, t^2 - 4)") {
  // Summing h+ log eps+ over all orders containing the one of discriminant
  // t^2 - 4 gives the Zagier L-value at s = 1.
  const auto w = trace_weights(120);
  for (i64 t = 3; t <= 120; ++t) {
    const i64 delta = t * t - 4;
    const double rhs = 2.0 * std::sqrt(static_cast<double>(delta)) * zagier_l(delta, 1.0).real();
    INFO("t = " << t);
    REQUIRE(w[static_cast<std::size_t>(t - 3)] == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("Pell solutions with long periods") {
  for (i64 d : {4 * 94, 4 * 151, 4 * 313, 4 * 661, 4 * 991, 1000001, 4 * 1000003}) {
    if (is_square(static_cast<u64>(d))) continue;
    const auto p = pell_solution(d);
    INFO("d = " << d);
    CHECK(pell_holds(p, d));
    CHECK(p.log_unit > 0.0);
  }
  // 4 * 991: u has 28 digits
  CHECK(pell_solution(4 * 991).u > bigint("1000000000000000000000000"));
}

TEST_CASE("psi_gamma small values against the conjugacy oracle") {
  CHECK(psi_gamma(6.0).psi == 0.0);
  CHECK(conjugacy_oracle(6.0) == 0.0);
  CHECK(psi_gamma(7.0).psi == doctest::Approx(kLogGolden2).epsilon(1e-14));
  CHECK(psi_gamma(6.85).psi == 0.0);
  CHECK(psi_gamma(6.86).psi == doctest::Approx(kLogGolden2).epsilon(1e-14));
  for (double x : {7.0, 10.0, 20.0, 50.0, 100.0, 200.0}) {
    INFO("x = " << x);
    const double oracle = conjugacy_oracle(x);
    const auto g = psi_gamma(x);
    CHECK(std::abs(g.psi - oracle) < 1e-9);
    CHECK(g.error == doctest::Approx(g.psi - x).epsilon(1e-15));
  }
  CHECK_THROWS_AS(conjugacy_oracle(501.0), precondition_error);
}

TEST_CASE("psi_gamma grid, monotonicity and the serial reference") {
  std::vector<double> xs;
  for (double x = 2.0; x <= 2e6; x *= 1.37) xs.push_back(x);
  const auto grid = psi_gamma_grid(xs);
  REQUIRE(grid.size() == xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) CHECK(grid[i].psi >= grid[i - 1].psi);
    CHECK(grid[i].psi >= 0.0);
  }
  for (std::size_t i = 0; i < xs.size(); i += 7) CHECK(psi_gamma(xs[i]).psi == grid[i].psi);
  for (double x : {500.0, 1e4, 3e5}) {
    const double ref = serial::psi_gamma(x);
    CHECK(std::abs(psi_gamma(x).psi - ref) < 1e-9 * std::max(1.0, ref));
  }
  // trivial-bound sanity
  for (const auto& g : psi_gamma_grid({1e3, 1e4, 1e5, 1e6})) CHECK(std::abs(g.error) < 5.0 * std::pow(g.x, 0.76));
  CHECK_THROWS_AS(psi_gamma(1.5), precondition_error);
  CHECK_THROWS_AS(psi_gamma(2e9), precondition_error);
  CHECK_THROWS_AS(psi_gamma_grid({10.0, 5.0}), precondition_error);
}
