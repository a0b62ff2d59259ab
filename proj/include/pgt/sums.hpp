#pragma once

#include "pgt/arith.hpp"

namespace pgt {

// sum_{n <= x} (D | n), exact; uses one period of chi_D.
i64 char_partial_sum(i64 d_fund, i64 x);

struct CharSumEnvelopes {
  i64 sum;
  double polya_vinogradov;  // |D|^{1/2} log |D|
  double lemma_envelope;    // x^alpha |D|^beta
  double lindelof_envelope; // x^{1/2}
  double alpha, beta;
};

// alpha = 1 - 1/(2(1 + theta)), beta = theta / (1 + theta)
CharSumEnvelopes envelope_report(i64 d_fund, i64 x, double theta);

// sum_{R < r <= 2R} sum_{B < a <= A + B} ((a^2 - 4) | r)
i64 bilinear_sum(i64 R, i64 A, i64 B);

struct SumWindow {
  i64 A;
  i64 B;
  i64 C;
};

struct MeanValue {
  i64 value;
  double main_term;
  double residual;
};

// F(A, B, C) = sum_{B < a <= A + B} sum_{c <= C} rho(c, a), main term 6 A C / pi^2.
MeanValue mean_value_F(const SumWindow& w);

struct TwistedMeanValue {
  cplx value;
  double main_term;
};

// F_x(A, B, C) = sum_{C < c <= 2C} sum_a rho(c, a) e((B - a) x) with main term
// 6 C sin(2 pi A x) / (pi^3 x). symmetric: |B - a| <= A; otherwise B < a <= A + B.
TwistedMeanValue mean_value_Fx(const SumWindow& w, double x, bool symmetric = true);

}  // namespace pgt
