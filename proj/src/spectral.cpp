#include "pgt/spectral.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pgt/config.hpp"
#include "pgt/errors.hpp"
#include "pgt/parallel.hpp"
#include "pgt/quadforms.hpp"
#include "pgt/quadrature.hpp"

namespace pgt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, int line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw parse_error("not a real number: '" + std::string(s) + "'", line);
  return v;
}

int significant_digits(std::string_view s) {
  int n = 0;
  bool leading = true;
  for (char ch : s) {
    if (ch == 'e' || ch == 'E') break;
    if (!std::isdigit(static_cast<unsigned char>(ch))) continue;
    if (leading && ch == '0') continue;
    leading = false;
    ++n;
  }
  return n;
}

double bump(double v) { return std::abs(v) < 1.0 ? std::exp(-1.0 / (1.0 - v * v)) : 0.0; }

// int_{-1}^{1} exp(-1/(1 - v^2)) dv
double bump_integral() {
  static const double value = adaptive_simpson<double>(bump, -1.0, 1.0, 1e-15, 64);
  return value;
}

}  // namespace

EigenvalueTable parse_eigenvalues(const std::string& text, const std::string& source) {
  EigenvalueTable table{{}, 0.0, source};
  bool have_header = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    if (s.starts_with("complete_to=")) {
      if (have_header) throw parse_error("duplicate complete_to header", line);
      table.complete_to = parse_real(trim(s.substr(12)), line);
      have_header = true;
      continue;
    }
    if (!have_header) throw parse_error("value before the complete_to header", line);
    const double t = parse_real(s, line);
    if (significant_digits(s) < 12) throw parse_error("fewer than 12 significant digits", line);
    if (!(t > 9.0)) throw parse_error("spectral parameter must exceed 9", line);
    if (!table.t_values.empty() && !(t > table.t_values.back()))
      throw parse_error("values must be strictly increasing", line);
    table.t_values.push_back(t);
  }
  if (!have_header) throw parse_error("missing complete_to header", line);
  if (table.t_values.empty()) throw parse_error("no spectral parameters", line);
  if (table.complete_to > table.t_values.back())
    throw parse_error("complete_to exceeds the last listed value", line);
  return table;
}

EigenvalueTable load_eigenvalues(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw precondition_error("cannot open eigenvalue file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_eigenvalues(buf.str(), path);
}

std::size_t eigenvalue_count(const EigenvalueTable& table, double T) {
  return static_cast<std::size_t>(std::upper_bound(table.t_values.begin(), table.t_values.end(), T) -
                                  table.t_values.begin());
}

cplx spectral_sum(const EigenvalueTable& table, double X, double T) {
  if (!(X > 0.0)) throw precondition_error("spectral_sum: X must be positive");
  if (T > table.complete_to) throw precondition_error("spectral_sum: T exceeds the completeness height of the table");
  const double log_x = std::log(X);
  const std::size_t n = eigenvalue_count(table, T);
  return par::map_sum<cplx>(n, [&](std::size_t j) {
    const double phase = table.t_values[j] * log_x;
    return std::polar(1.0, phase) + std::polar(1.0, -phase);
  });
}

cplx weighted_spectral_sum(const EigenvalueTable& table, double X, double T) {
  if (!(X > 0.0)) throw precondition_error("weighted_spectral_sum: X must be positive");
  if (!(T > 0.0)) return 0.0;
  if (!(std::exp(-table.complete_to / T) < kDefaultTolerances.spectral_damping))
    throw precondition_error("weighted_spectral_sum: damping too weak for the completeness height");
  const double log_x = std::log(X);
  return par::map_sum<cplx>(table.t_values.size(), [&](std::size_t j) {
    const double t = table.t_values[j];
    return std::polar(std::exp(-t / T), t * log_x);
  });
}

Kernel::Kernel(double Y) : Y_(Y) {
  if (!(Y > 0.0)) throw precondition_error("Kernel: Y must be positive");
  scale_ = 1.0 / (0.5 * Y * bump_integral());
}

double Kernel::operator()(double u) const { return scale_ * bump((2.0 * u - 3.0 * Y_) / Y_); }

double Kernel::mass() const {
  return adaptive_simpson<double>([this](double u) { return (*this)(u); }, Y_, 2.0 * Y_, 1e-13, 64);
}

SmoothedError smoothed_error(const EigenvalueTable& table, double x, double Y, const Kernel& kernel, double eps) {
  if (!(x >= 4.0)) throw precondition_error("smoothed_error: x must be at least 4");
  if (!(Y >= std::sqrt(x) && Y <= x)) throw precondition_error("smoothed_error: Y must lie in [sqrt(x), x]");
  if (std::abs(kernel.Y() - Y) > 1e-12 * Y) throw precondition_error("smoothed_error: kernel support does not match Y");
  if (!(eps > 0.0)) throw precondition_error("smoothed_error: eps must be positive");
  const double cutoff = std::pow(x, 1.0 + eps) / Y;
  if (cutoff > table.complete_to) throw precondition_error("smoothed_error: spectral cutoff exceeds the table completeness");

  // Direct side. Psi is a step function with jumps w_t at N_t, so
  // int Psi(x+u) k(u) du = Psi(x+Y) + sum_{x+Y < N_t <= x+2Y} w_t int_{N_t-x}^{2Y} k,
  // and int (x+u) k(u) du = x + 3Y/2 by the symmetry of the bump.
  const double hi = x + 2.0 * Y;
  i64 t_max = static_cast<i64>(std::floor(std::sqrt(hi))) + 2;
  while (t_max >= 3 && trace_log_norm(t_max) > std::log(hi)) --t_max;
  const std::vector<double> weights = trace_weights(t_max);
  std::vector<double> pieces;
  const double log_lo = std::log(x + Y);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double log_norm = trace_log_norm(static_cast<i64>(i) + 3);
    if (log_norm <= log_lo) {
      pieces.push_back(weights[i]);
    } else {
      const double v = std::exp(log_norm) - x;
      const double tail = adaptive_simpson<double>(kernel, v, 2.0 * Y, 1e-13, 16);
      pieces.push_back(weights[i] * tail);
    }
  }
  const double direct = par::pairwise_sum(pieces) - (x + 1.5 * Y);

  // Spectral side; -t_j contributes the complex conjugate of t_j's term.
  const std::size_t n = eigenvalue_count(table, cutoff);
  const double spectral = par::map_sum<double>(n, [&](std::size_t j) {
    const cplx s(0.5, table.t_values[j]);
    const auto integrand = [&](double u) { return std::pow(x + u, s) * kernel(u); };
    const cplx integral = adaptive_simpson<cplx>(integrand, Y, 2.0 * Y, 1e-10 * std::sqrt(x), 32);
    return 2.0 * (integral / s).real();
  });
  return {direct, spectral, direct - spectral, cutoff, n};
}

}  // namespace pgt
