#pragma once

#include <vector>

namespace pgt {

struct BoundProfile {
  double theta;
  double alpha;      // 1 - 1/(2(1 + theta))
  double beta;       // theta / (1 + theta)
  double sigma_opt;  // (20 + 30 theta - 4 theta^2) / (22 + 27 theta - 2 theta^2)
  double delta_exp;  // 5/8 + theta/4
  double e_value;    // E = (3 + 2 beta - (3 + beta) sigma) / ((3 - 2 alpha)(2 - sigma)) at sigma_opt
  double balance_residual;  // |(1/2 + E) - (2 delta - 1/2 - E)|
};

// E(alpha, beta, sigma) as above.
double e_exponent(double alpha, double beta, double sigma);

// Builds the profile for theta in [0, 1/6] and checks that
// max(1/2 + E, 2 delta - 1/2 - E) = delta to 1e-10; throws otherwise.
BoundProfile exponent_calculus(double theta);

// theta <= E(profile), with 1e-10 slack (equality is reached at theta = 1/6).
bool theta_constraint_check(const BoundProfile& p);

struct Fit {
  double slope;
  double intercept;
  double residual;  // max |log|y| - (intercept + slope log x)|
  std::size_t used; // rows with y != 0
};

// Least squares through (log x, log|y|); rows with y == 0 are dropped.
Fit fit_exponent(const std::vector<double>& x, const std::vector<double>& y);

struct SweepRow {
  double parameter;
  double value;
  double envelope;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  Fit fit;
};

// Fits |value| against parameter.
SweepResult make_sweep(std::vector<SweepRow> rows);

}  // namespace pgt
