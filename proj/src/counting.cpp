#include "pgt/counting.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "pgt/errors.hpp"
#include "pgt/summation.hpp"

namespace pgt {

namespace {

u64 ipow(u64 b, int e) {
  u64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Solutions of y^2 = u (mod p^j) for a unit u.
u64 unit_root_count(i64 u, u64 p, int j) {
  if (p == 2) {
    if (j == 1) return 1;
    if (j == 2) return floor_mod(u, 4) == 1 ? 2 : 0;
    return floor_mod(u, 8) == 1 ? 4 : 0;
  }
  return jacobi(u, static_cast<i64>(p)) == 1 ? 2 : 0;
}

u64 rho_q_brute(u64 q, i64 delta) {
  const i64 mod = static_cast<i64>(4 * q);
  const i64 target = floor_mod(delta, mod);
  u64 count = 0;
  for (u64 x = 0; x < 2 * q; ++x) {
    const i64 xi = static_cast<i64>(x);
    if (floor_mod(xi * xi, mod) == target) ++count;
  }
  return count;
}

// d mod 2^k with d^2 - a d + 1 = 0, by enumeration.
u64 rho_two_power(u64 pk, i64 a) {
  const i64 m = static_cast<i64>(pk);
  const i64 ar = floor_mod(a, m);
  u64 count = 0;
  for (i64 d = 0; d < m; ++d)
    if (floor_mod(d * d - ar * d + 1, m) == 0) ++count;
  return count;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

u64 count_square_roots(i64 r, u64 p, int k) {
  if (k <= 0) return 1;
  const u64 pk = ipow(p, k);
  i64 rr = floor_mod(r, static_cast<i64>(pk));
  if (rr == 0) return ipow(p, k / 2);
  int v = 0;
  while (rr % static_cast<i64>(p) == 0) {
    rr /= static_cast<i64>(p);
    ++v;
  }
  if (v % 2) return 0;
  return unit_root_count(rr, p, k - v) * ipow(p, v / 2);
}

u64 rho_q_closed_form(u64 q, i64 delta) {
  if (q == 0) throw precondition_error("rho_q: q must be positive");
  if (!is_discriminant(delta)) return 0;
  // For odd q the 2-part contributes exactly one class, given delta = 0, 1 (mod 4).
  u64 result = 1;
  for (const auto& [p, e] : factorize(q)) {
    if (p == 2) {
      // x mod 2^{e+1} with x^2 = delta mod 2^{e+2}: half of the roots mod 2^{e+2}
      result *= count_square_roots(delta, 2, e + 2) / 2;
    } else {
      result *= count_square_roots(delta, p, e);
    }
    if (result == 0) return 0;
  }
  return result;
}

u64 rho_q(u64 q, i64 delta) {
  if (q == 0) throw precondition_error("rho_q: q must be positive");
  if (q <= 1000) return rho_q_brute(q, delta);
  return rho_q_closed_form(q, delta);
}

i64 lambda_q(u64 q, i64 delta) {
  if (q == 0) throw precondition_error("lambda_q: q must be positive");
  i64 acc = 0;
  for (u64 q1 = 1; q1 * q1 <= q; ++q1) {
    if (q % (q1 * q1) != 0) continue;
    const u64 rest = q / (q1 * q1);
    for (u64 q2 : divisors(rest)) {
      const int mu = mobius(q2);
      if (mu == 0) continue;
      acc += mu * static_cast<i64>(rho_q(rest / q2, delta));
    }
  }
  return acc;
}

u64 rho_ca(const Factorization& c_factors, i64 a) {
  u64 result = 1;
  for (const auto& [p, e] : c_factors) {
    if (p == 2) {
      result *= rho_two_power(ipow(2, e), a);
    } else {
      // 2 is invertible: (2d - a)^2 = a^2 - 4
      const i64 pk = static_cast<i64>(ipow(p, e));
      const i64 ar = floor_mod(a, pk);
      result *= count_square_roots(floor_mod(ar * ar - 4, pk), p, e);
    }
    if (result == 0) return 0;
  }
  return result;
}

u64 rho_ca(u64 c, i64 a) {
  if (c == 0) throw precondition_error("rho_ca: c must be positive");
  return rho_ca(factorize(c), a);
}

u64 rho_k_product(u64 k, i64 a) {
  if (k == 0 || k % 2 == 0) throw precondition_error("rho_k_product: k must be odd and positive");
  const Factorization f = factorize(k);
  if (mobius(f) == 0) throw precondition_error("rho_k_product: k must be squarefree");
  u64 result = 1;
  for (const auto& pp : f) {
    const i64 p = static_cast<i64>(pp.prime);
    const i64 ar = floor_mod(a, p);
    result *= static_cast<u64>(1 + kronecker(ar * ar - 4, p));
  }
  return result;
}

std::vector<std::uint32_t> rho_residue_table(u64 c) {
  if (c == 0) throw precondition_error("rho_residue_table: c must be positive");
  std::vector<std::uint32_t> table(c, 0);
  const i64 m = static_cast<i64>(c);
  for (i64 d = 0; d < m; ++d) {
    if (std::gcd(d, m) != 1) continue;
    table[static_cast<std::size_t>(floor_mod(d + mod_inverse(d, m), m))] += 1;
  }
  return table;
}

cplx kloosterman(i64 n, u64 c) {
  if (c == 0) throw precondition_error("kloosterman: c must be positive");
  const i64 m = static_cast<i64>(c);
  const i64 nr = floor_mod(n, m);
  NeumaierSum re, im;
  for (i64 a = 0; a < m; ++a) {
    if (std::gcd(a, m) != 1) continue;
    const i64 t = floor_mod(a + mod_inverse(a, m), m);
    const auto r = static_cast<i64>((static_cast<__int128>(t) * nr) % m);
    const double angle = kTwoPi * static_cast<double>(r) / static_cast<double>(m);
    re.add(std::cos(angle));
    im.add(std::sin(angle));
  }
  return {re.value(), im.value()};
}

cplx kloosterman_rho_expansion(i64 n, u64 c) {
  if (c == 0) throw precondition_error("kloosterman_rho_expansion: c must be positive");
  const Factorization f = factorize(c);
  const i64 m = static_cast<i64>(c);
  const i64 nr = floor_mod(n, m);
  NeumaierSum re, im;
  for (i64 a = 0; a < m; ++a) {
    const u64 w = rho_ca(f, a);
    if (w == 0) continue;
    const auto r = static_cast<i64>((static_cast<__int128>(a) * nr) % m);
    const double angle = kTwoPi * static_cast<double>(r) / static_cast<double>(m);
    re.add(static_cast<double>(w) * std::cos(angle));
    im.add(static_cast<double>(w) * std::sin(angle));
  }
  return {re.value(), im.value()};
}

double verify_kloosterman_identity(i64 n, u64 c) {
  return std::abs(kloosterman(n, c) - kloosterman_rho_expansion(n, c));
}

}  // namespace pgt
