// Serial reference kernels against the OpenMP kernels.
//   bench_kernels [threads] [repeats]
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "pgt/lseries.hpp"
#include "pgt/parallel.hpp"
#include "pgt/quadforms.hpp"
#include "pgt/serial.hpp"
#include "pgt/spectral.hpp"
#include "pgt/sums.hpp"

namespace {

double seconds(const std::function<double()>& f, int repeats, double& value) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    value = f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, int repeats, const std::function<double()>& serial, const std::function<double()>& parallel) {
  double vs = 0.0, vp = 0.0;
  const double ts = seconds(serial, repeats, vs);
  const double tp = seconds(parallel, repeats, vp);
  const double diff = std::abs(vs - vp) / std::max(1.0, std::abs(vs));
  std::printf("%-22s %10.4f %10.4f %8.2f %12.3g\n", name, ts, tp, ts / tp, diff);
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : pgt::par::threads();
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  pgt::par::set_threads(threads);

  std::printf("threads %d, best of %d\n", threads, repeats);
  std::printf("%-22s %10s %10s %8s %12s\n", "kernel", "serial_s", "parallel_s", "speedup", "rel_diff");

  row("psi_gamma(1e6)", repeats, [] { return pgt::serial::psi_gamma(1e6); }, [] { return pgt::psi_gamma(1e6).psi; });
  row("average X=200", repeats, [] { return pgt::serial::average_sum(200, 0.0).real(); },
      [] { return pgt::average_central_values(200, 0.0).sum.real(); });
  row("bilinear R=A=1000", repeats, [] { return double(pgt::serial::bilinear_sum(1000, 1000, 5000)); },
      [] { return double(pgt::bilinear_sum(1000, 1000, 5000)); });
  const pgt::SumWindow w{500, 10000, 500};
  row("F(500,1e4,500)", repeats, [&] { return double(pgt::serial::mean_value_F(w)); },
      [&] { return double(pgt::mean_value_F(w).value); });
  const pgt::SumWindow wx{200, 10000, 300};
  row("F_x(200,1e4,300)", repeats, [&] { return pgt::serial::mean_value_Fx(wx, 0.01).real(); },
      [&] { return pgt::mean_value_Fx(wx, 0.01).value.real(); });

  try {
    const auto table = pgt::load_eigenvalues(PGT_DEFAULT_EIGENVALUES);
    row("spectral_sum", repeats * 100, [&] { return pgt::serial::spectral_sum(table, 1e6, table.complete_to).real(); },
        [&] { return pgt::spectral_sum(table, 1e6, table.complete_to).real(); });
  } catch (const std::exception& e) {
    std::printf("spectral_sum skipped: %s\n", e.what());
  }
  return 0;
}
