#pragma once

namespace pgt {

// Every numerical tolerance used by operations and acceptance checks.
struct Tolerances {
  double special_relative = 1e-10;      // gamma / zeta / Hurwitz
  double lseries_relative = 1e-8;       // Dirichlet L(s, chi_D)
  double identity_residual = 1e-9;      // exact arithmetic identities in floating point
  double functional_equation = 1e-6;    // |Lambda(s) - Lambda(1-s)|
  double oracle_match = 1e-9;           // psi_gamma vs conjugacy oracle
  double quadrature_absolute = 1e-6;    // integral of the density m_t
  double kernel_mass = 1e-8;            // unit mass of the smoothing kernel
  double imaginary_part = 1e-12;        // sums that are real by construction
  double balance = 1e-10;               // exponent-calculus identities
  double thread_agreement = 1e-12;      // results across thread counts
  double spectral_damping = 1e-8;       // exp(-complete_to / T) cap
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace pgt
