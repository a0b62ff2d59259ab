#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <omp.h>

namespace pgt::par {

void set_threads(int n);
int threads();

// Pairwise (cascade) summation over a fixed binary tree. The tree shape only
// depends on the length, so the result is bit-identical whatever produced the
// terms.
template <class T>
T pairwise_sum(std::span<const T> v) {
  constexpr std::size_t kLeaf = 8;
  if (v.size() <= kLeaf) {
    T acc{};
    for (const T& x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v));
}

// out[i] = f(i) for i in [0, n), evaluated with a dynamic OpenMP schedule.
template <class T, class F>
std::vector<T> map(std::size_t n, F&& f) {
  std::vector<T> out(n);
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  return out;
}

template <class T, class F>
T map_sum(std::size_t n, F&& f) {
  return pairwise_sum(map<T>(n, std::forward<F>(f)));
}

}  // namespace pgt::par
