#include "pgt/parallel.hpp"

#include "pgt/errors.hpp"

namespace pgt::par {

void set_threads(int n) {
  if (n < 1) throw precondition_error("thread count must be positive");
  omp_set_num_threads(n);
}

int threads() { return omp_get_max_threads(); }

}  // namespace pgt::par
