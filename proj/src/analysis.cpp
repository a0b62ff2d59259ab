#include "pgt/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "pgt/config.hpp"
#include "pgt/errors.hpp"

namespace pgt {

double e_exponent(double alpha, double beta, double sigma) {
  return (3.0 + 2.0 * beta - (3.0 + beta) * sigma) / ((3.0 - 2.0 * alpha) * (2.0 - sigma));
}

BoundProfile exponent_calculus(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0 / 6.0)) throw precondition_error("exponent_calculus: theta must lie in [0, 1/6]");
  BoundProfile p{};
  p.theta = theta;
  p.alpha = 1.0 - 1.0 / (2.0 * (1.0 + theta));
  p.beta = theta / (1.0 + theta);
  p.sigma_opt = (20.0 + 30.0 * theta - 4.0 * theta * theta) / (22.0 + 27.0 * theta - 2.0 * theta * theta);
  p.delta_exp = 5.0 / 8.0 + theta / 4.0;
  p.e_value = e_exponent(p.alpha, p.beta, p.sigma_opt);
  const double first = 0.5 + p.e_value;
  const double second = 2.0 * p.delta_exp - 0.5 - p.e_value;
  p.balance_residual = std::abs(first - second);
  if (std::abs(std::max(first, second) - p.delta_exp) > kDefaultTolerances.balance)
    throw std::logic_error("exponent_calculus: branch balance failed");
  return p;
}

bool theta_constraint_check(const BoundProfile& p) { return p.theta <= p.e_value + kDefaultTolerances.balance; }

Fit fit_exponent(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw precondition_error("fit_exponent: x and y differ in length");
  if (x.size() < 3) throw precondition_error("fit_exponent: needs at least 3 rows");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) throw precondition_error("fit_exponent: x must be positive");
    if (i > 0 && !(x[i] > x[i - 1])) throw precondition_error("fit_exponent: x must be strictly increasing");
  }
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i] == 0.0) continue;
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(std::abs(y[i])));
  }
  if (lx.empty()) throw precondition_error("fit_exponent: all y are zero");
  const double n = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  const double intercept = my - slope * mx;
  double residual = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i)
    residual = std::max(residual, std::abs(ly[i] - (intercept + slope * lx[i])));
  return {slope, intercept, residual, lx.size()};
}

SweepResult make_sweep(std::vector<SweepRow> rows) {
  std::vector<double> x, y;
  for (const auto& r : rows) {
    x.push_back(r.parameter);
    y.push_back(r.value);
  }
  Fit fit = fit_exponent(x, y);
  return {std::move(rows), fit};
}

}  // namespace pgt
