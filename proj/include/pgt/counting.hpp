#pragma once

#include <cstdint>
#include <vector>

#include "pgt/arith.hpp"

namespace pgt {

// #{x mod p^k : x^2 = r (mod p^k)}, any prime p including 2.
u64 count_square_roots(i64 r, u64 p, int k);

// rho_q(delta) = #{x mod 2q : x^2 = delta (mod 4q)}.
// Brute force for q <= 1000, the multiplicative closed form above that.
u64 rho_q(u64 q, i64 delta);
u64 rho_q_closed_form(u64 q, i64 delta);

// lambda_q(delta) = sum_{q1^2 q2 q3 = q} mu(q2) rho_{q3}(delta)
i64 lambda_q(u64 q, i64 delta);

// rho(c, a) = #{d mod c : d^2 - a d + 1 = 0 (mod c)}, multiplicative in c.
u64 rho_ca(u64 c, i64 a);
u64 rho_ca(const Factorization& c_factors, i64 a);

// prod_{p | k} (1 + ((a^2 - 4)/p)) for odd squarefree k.
u64 rho_k_product(u64 k, i64 a);

// rho(c, a) for every residue a mod c, built by pairing each unit d with
// a = d + d^{-1}. Used by the mean-value sweeps.
std::vector<std::uint32_t> rho_residue_table(u64 c);

// S(n, n; c) = sum over units a mod c of e((a + a^{-1}) n / c).
cplx kloosterman(i64 n, u64 c);
// sum_{a mod c} rho(c, a) e(a n / c)
cplx kloosterman_rho_expansion(i64 n, u64 c);
// |S(n, n; c) - sum_a rho(c, a) e(a n / c)|
double verify_kloosterman_identity(i64 n, u64 c);

}  // namespace pgt
