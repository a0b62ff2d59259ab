#pragma once

#include <string>
#include <vector>

#include "pgt/arith.hpp"

namespace pgt {

// Spectral parameters t_j (lambda_j = 1/4 + t_j^2) of Maass cusp forms on
// PSL2(Z)\H, known to be complete up to complete_to.
struct EigenvalueTable {
  std::vector<double> t_values;
  double complete_to;
  std::string source;
};

// Format: '#' comment lines, one `complete_to=<real>` header line, then one
// t_j per line, strictly increasing, every value above 9.
EigenvalueTable load_eigenvalues(const std::string& path);
EigenvalueTable parse_eigenvalues(const std::string& text, const std::string& source);

// sum_{0 < t_j <= T} (X^{i t_j} + X^{-i t_j}); requires T <= complete_to.
cplx spectral_sum(const EigenvalueTable& table, double X, double T);
// sum_j X^{i t_j} e^{-t_j / T}; requires e^{-complete_to / T} < 1e-8.
cplx weighted_spectral_sum(const EigenvalueTable& table, double X, double T);
// #{t_j <= T}
std::size_t eigenvalue_count(const EigenvalueTable& table, double T);

// Smooth bump exp(-1/(1 - v^2)), v in (-1, 1), moved onto [Y, 2Y] and scaled
// to unit mass.
class Kernel {
 public:
  explicit Kernel(double Y);
  double Y() const { return Y_; }
  double operator()(double u) const;
  double mass() const;  // integral recomputed by quadrature; 1 up to 1e-8
  static constexpr const char* shape = "exp(-1/(1-v^2)) on [Y, 2Y]";

 private:
  double Y_;
  double scale_;
};

struct SmoothedError {
  double direct;     // int (Psi(x+u) - x - u) k(u) du
  double spectral;   // sum_{|t_j| <= x^{1+eps}/Y} (1/s_j) int (x+u)^{s_j} k(u) du
  double difference; // direct - spectral
  double cutoff;     // x^{1+eps} / Y
  std::size_t terms; // number of t_j > 0 used (each counted with -t_j as well)
};

// E(x; k) computed from Psi_Gamma directly and from the spectrum.
SmoothedError smoothed_error(const EigenvalueTable& table, double x, double Y, const Kernel& kernel,
                             double eps = 0.05);

}  // namespace pgt
