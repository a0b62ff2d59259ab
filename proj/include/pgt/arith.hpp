#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace pgt {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using cplx = std::complex<double>;

struct PrimePower {
  u64 prime;
  int exponent;
};
using Factorization = std::vector<PrimePower>;

// Trial division over a mod-6 wheel. Inputs in this library stay below 1e12.
Factorization factorize(u64 n);

u64 isqrt(u64 n);
bool is_square(u64 n);
i64 floor_mod(i64 a, i64 m);
// Inverse of a modulo m > 0; throws precondition_error if gcd(a, m) != 1.
i64 mod_inverse(i64 a, i64 m);

// Jacobi symbol (a|n) for odd n > 0.
int jacobi(i64 a, i64 n);

// Kronecker symbol (a|n) with the full extension used for chi_D:
//   (a|0)  = 1 if a = +-1, else 0
//   (a|-1) = -1 if a < 0, else 1
//   (a|2)  = 0 for even a; 1 for a = +-1 (mod 8); -1 for a = +-3 (mod 8)
int kronecker(i64 a, i64 n);

// delta = d_fund * ell^2 with d_fund a fundamental discriminant.
struct Discriminant {
  i64 delta;
  i64 d_fund;
  i64 ell;
};

bool is_discriminant(i64 d);  // d = 0, 1 (mod 4)
bool is_fundamental_discriminant(i64 d);
Discriminant decompose_discriminant(i64 delta);

int mobius(u64 n);
u64 totient(u64 n);
bool is_squarefree(u64 n);
u64 divisor_count(u64 n);
std::vector<u64> divisors(u64 n);                   // ascending
std::vector<u64> divisors(const Factorization& f);  // ascending

int mobius(const Factorization& f);

// tau_s(n) = n^{s-1/2} sum_{d | n} d^{1-2s}
cplx tau_s(u64 n, cplx s);

}  // namespace pgt
