#include "pgt/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "pgt/errors.hpp"

namespace pgt {

Factorization factorize(u64 n) {
  if (n == 0) throw precondition_error("factorize: n must be positive");
  Factorization f;
  auto strip = [&](u64 p) {
    if (n % p != 0) return;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (u64 p = 5; p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(u64 n) {
  const u64 r = isqrt(n);
  return r * r == n;
}

i64 floor_mod(i64 a, i64 m) {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mod_inverse(i64 a, i64 m) {
  if (m <= 0) throw precondition_error("mod_inverse: modulus must be positive");
  i64 r0 = m, r1 = floor_mod(a, m);
  i64 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const i64 q = r0 / r1;
    i64 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) {
    if (m == 1) return 0;
    throw precondition_error("mod_inverse: argument not invertible");
  }
  return floor_mod(s0, m);
}

int jacobi(i64 a, i64 n) {
  if (n <= 0 || n % 2 == 0) throw precondition_error("jacobi: n must be odd and positive");
  u64 x = static_cast<u64>(floor_mod(a, n));
  u64 m = static_cast<u64>(n);
  int result = 1;
  while (x != 0) {
    const int v = std::countr_zero(x);
    x >>= v;
    if ((v & 1) && (m % 8 == 3 || m % 8 == 5)) result = -result;
    if (x % 4 == 3 && m % 4 == 3) result = -result;
    std::swap(x, m);
    x %= m;
  }
  return m == 1 ? result : 0;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -1;
  }
  if (n % 2 == 0) {
    if (a % 2 == 0) return 0;
    const int v = std::countr_zero(static_cast<u64>(n));
    n >>= v;
    if (v & 1) {
      const i64 r = floor_mod(a, 8);
      if (r == 3 || r == 5) result = -result;
    }
  }
  return result * jacobi(a, n);
}

bool is_discriminant(i64 d) {
  const i64 r = floor_mod(d, 4);
  return r == 0 || r == 1;
}

bool is_fundamental_discriminant(i64 d) {
  if (d == 1) return true;
  if (d == 0) return false;
  const u64 ad = static_cast<u64>(d < 0 ? -d : d);
  if (floor_mod(d, 4) == 1) return is_squarefree(ad);
  if (floor_mod(d, 4) != 0) return false;
  const i64 m = d / 4;
  const i64 mr = floor_mod(m, 4);
  return (mr == 2 || mr == 3) && is_squarefree(ad / 4);
}

Discriminant decompose_discriminant(i64 delta) {
  if (delta == 0) throw precondition_error("decompose_discriminant: delta must be nonzero");
  if (!is_discriminant(delta)) throw precondition_error("decompose_discriminant: delta must be 0 or 1 mod 4");
  const i64 sign = delta < 0 ? -1 : 1;
  u64 abs_delta = static_cast<u64>(delta < 0 ? -delta : delta);
  i64 ell = 1;
  int two_exp = 0;
  u64 core = 1;  // odd squarefree part
  for (const auto& [p, e] : factorize(abs_delta)) {
    if (p == 2) {
      two_exp = e;
      continue;
    }
    for (int i = 0; i < e / 2; ++i) ell *= static_cast<i64>(p);
    if (e % 2) core *= p;
  }
  const i64 u = sign * static_cast<i64>(core);
  i64 d_fund;
  if (two_exp % 2 == 0) {
    if (floor_mod(u, 4) == 1) {
      d_fund = u;
      ell <<= two_exp / 2;
    } else {
      d_fund = 4 * u;
      ell <<= two_exp / 2 - 1;
    }
  } else {
    d_fund = 8 * u;
    ell <<= (two_exp - 3) / 2;
  }
  return {delta, d_fund, ell};
}

int mobius(const Factorization& f) {
  for (const auto& pp : f)
    if (pp.exponent > 1) return 0;
  return f.size() % 2 ? -1 : 1;
}

int mobius(u64 n) { return mobius(factorize(n)); }

u64 totient(u64 n) {
  u64 r = n;
  for (const auto& pp : factorize(n)) r = r / pp.prime * (pp.prime - 1);
  return r;
}

bool is_squarefree(u64 n) { return mobius(n) != 0; }

u64 divisor_count(u64 n) {
  u64 c = 1;
  for (const auto& pp : factorize(n)) c *= static_cast<u64>(pp.exponent + 1);
  return c;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> d{1};
  for (const auto& [p, e] : f) {
    const std::size_t base = d.size();
    u64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) d.push_back(d[i] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

cplx tau_s(u64 n, cplx s) {
  if (n == 0) throw precondition_error("tau_s: n must be positive");
  cplx acc = 0.0;
  for (u64 d : divisors(n)) acc += std::pow(static_cast<double>(d), 1.0 - 2.0 * s);
  return std::pow(static_cast<double>(n), s - 0.5) * acc;
}

}  // namespace pgt
