#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pgt/arith.hpp"

namespace pgt {

using bigint = boost::multiprecision::cpp_int;

// Integral binary quadratic form a x^2 + b xy + c y^2.
struct Form {
  i64 a, b, c;
  friend bool operator==(const Form&, const Form&) = default;
};

// Least t, u > 0 with t^2 - delta u^2 = 4, i.e. the norm +1 fundamental unit
// (t + u sqrt(delta)) / 2 of the order of discriminant delta.
struct PellSolution {
  bigint t;
  bigint u;
  double log_unit;  // log((t + u sqrt(delta)) / 2)
};

struct FormClassSet {
  i64 delta;
  std::vector<Form> reduced_forms;        // grouped cycle by cycle
  std::vector<std::size_t> cycle_starts;  // offsets into reduced_forms
  i64 class_number;                       // number of cycles
  double fundamental_unit;
  double regulator;
  PellSolution pell;
};

// Reduced forms: 0 < b < sqrt(delta), sqrt(delta) - b < 2|a| < sqrt(delta) + b.
// Only primitive forms are listed, so class_number is the narrow class number
// of the order of discriminant delta.
FormClassSet reduce_forms(i64 delta);
// Pell data via the continued fraction of (b0 + sqrt(delta)) / 2.
PellSolution pell_solution(i64 delta);

// Reduction neighbour (a, b, c) -> (c, b', (b'^2 - delta) / 4c) with
// b' = -b (mod 2c) and sqrt(delta) - 2|c| < b' < sqrt(delta).
Form reduction_step(const Form& f, i64 delta);

struct GeodesicCount {
  double x;
  double psi;
  double error;  // psi - x
};

// Psi_Gamma(x) for PSL2(Z) assembled trace by trace: every hyperbolic class of
// trace t >= 3 has norm ((t + sqrt(t^2 - 4)) / 2)^2 and corresponds to a form
// u * f0 with f0 primitive of discriminant (t^2 - 4) / u^2. The classes of a
// given f0-discriminant d number h+(d), and each is a power of a primitive
// class of norm eps+(d)^2, which supplies the weight 2 log eps+(d).
GeodesicCount psi_gamma(double x);
// Same, for a whole increasing grid of x values in one pass.
std::vector<GeodesicCount> psi_gamma_grid(const std::vector<double>& xs);

// Per-trace weights sum_u h+(d) 2 log eps+(d) for t = 3 .. t_max, index t - 3.
std::vector<double> trace_weights(i64 t_max);
// log of ((t + sqrt(t^2 - 4)) / 2)^2
double trace_log_norm(i64 t);

// Ground truth for small x: enumerate hyperbolic matrices, sort them into
// conjugacy classes by connectivity under conjugation by S and T, detect
// primitive roots directly, and sum the log-norms of the primitive roots.
double conjugacy_oracle(double x);

}  // namespace pgt
