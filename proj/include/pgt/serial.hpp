#pragma once

// Single-threaded reference versions of the parallel kernels. They use plain
// loops (often in a different order) and compensated summation, and exist so
// the tests and the benchmark have something independent to compare against.

#include "pgt/lseries.hpp"
#include "pgt/spectral.hpp"
#include "pgt/sums.hpp"

namespace pgt::serial {

// Psi_Gamma(x) with class numbers and units taken from reduce_forms().
double psi_gamma(double x);
cplx average_sum(i64 X, double t);
// a outer, r inner
i64 bilinear_sum(i64 R, i64 A, i64 B);
// rho(c, a) evaluated cell by cell
i64 mean_value_F(const SumWindow& w);
cplx mean_value_Fx(const SumWindow& w, double x, bool symmetric = true);
cplx spectral_sum(const EigenvalueTable& table, double X, double T);

}  // namespace pgt::serial
