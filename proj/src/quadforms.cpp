#include "pgt/quadforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "pgt/errors.hpp"
#include "pgt/parallel.hpp"

namespace pgt {

namespace {

void require_indefinite(i64 delta) {
  if (delta <= 0 || !is_discriminant(delta) || is_square(static_cast<u64>(delta)))
    throw precondition_error("quadratic forms: delta must be a positive non-square discriminant");
}

// Smallest-prime-factor table; factorization of any n below the limit in O(log n).
class SpfTable {
 public:
  explicit SpfTable(u64 limit) : spf_(limit + 1, 0) {
    for (u64 i = 2; i <= limit; ++i) {
      if (spf_[i] != 0) continue;
      for (u64 j = i; j <= limit; j += i)
        if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
  u64 limit() const { return spf_.size() - 1; }
  Factorization factor(u64 n) const {
    if (n > limit()) return factorize(n);
    Factorization f;
    while (n > 1) {
      const u64 p = spf_[n];
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.push_back({p, e});
    }
    return f;
  }

 private:
  std::vector<std::uint32_t> spf_;
};

// Divisors of n lying in [lo, hi], generated from the factorization.
void divisors_in_window(const Factorization& f, u64 lo, u64 hi, std::vector<u64>& out) {
  out.clear();
  out.push_back(1);
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
      u64 v = out[i];
      for (int k = 1; k <= e; ++k) {
        v *= p;
        if (v > hi) break;
        out.push_back(v);
      }
    }
  }
  std::erase_if(out, [&](u64 v) { return v < lo || v > hi; });
}

template <class Factorer>
std::vector<Form> reduced_forms_unsorted(i64 delta, const Factorer& factor) {
  const i64 s = static_cast<i64>(isqrt(static_cast<u64>(delta)));
  std::vector<Form> forms;
  std::vector<u64> divs;
  for (i64 b = (delta % 2 == 0) ? 2 : 1; b <= s; b += 2) {
    const i64 n = (delta - b * b) / 4;  // = -a c
    // sqrt(delta) - b < 2|a| < sqrt(delta) + b
    const u64 lo = static_cast<u64>((s - b + 2) / 2);
    const u64 hi = static_cast<u64>((s + b) / 2);
    if (lo > hi) continue;
    divisors_in_window(factor(static_cast<u64>(n)), lo, hi, divs);
    for (u64 ad : divs) {
      const i64 a = static_cast<i64>(ad);
      const i64 c = n / a;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      forms.push_back({a, b, -c});
      forms.push_back({-a, b, c});
    }
  }
  return forms;
}

bool form_less(const Form& x, const Form& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  return x.c < y.c;
}

struct Cycles {
  std::vector<Form> forms;
  std::vector<std::size_t> starts;
};

Cycles split_cycles(std::vector<Form> forms, i64 delta) {
  std::sort(forms.begin(), forms.end(), form_less);
  std::vector<char> seen(forms.size(), 0);
  auto index_of = [&](const Form& f) {
    const auto it = std::lower_bound(forms.begin(), forms.end(), f, form_less);
    if (it == forms.end() || !(*it == f)) throw std::logic_error("reduction step left the reduced set");
    return static_cast<std::size_t>(it - forms.begin());
  };
  Cycles out;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (seen[i]) continue;
    out.starts.push_back(out.forms.size());
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      out.forms.push_back(forms[j]);
      j = index_of(reduction_step(forms[j], delta));
    }
  }
  return out;
}

// Continued fraction of x0 = (b0 + sqrt(delta)) / 2, purely periodic.
// Returns the period length and the last two convergent denominators, plus
// log of the product of complete quotients over one period.
struct PeriodData {
  int length;
  bigint q_last, q_prev;
  double log_product;
  i64 b0;
};

PeriodData continued_fraction_period(i64 delta, bool exact) {
  const i64 s = static_cast<i64>(isqrt(static_cast<u64>(delta)));
  const i64 b0 = ((s - delta) % 2 == 0) ? s : s - 1;
  const double root = std::sqrt(static_cast<double>(delta));
  i64 P = b0, Q = 2;
  bigint q_prev = 1, q_cur = 0;  // q_{-2}, q_{-1}
  double log_product = 0.0;
  int length = 0;
  do {
    const i64 a = (P + s) / Q;
    log_product += std::log((static_cast<double>(P) + root) / static_cast<double>(Q));
    if (exact) {
      bigint next = a * q_cur + q_prev;
      q_prev = std::move(q_cur);
      q_cur = std::move(next);
    }
    P = a * Q - P;
    Q = (delta - P * P) / Q;
    ++length;
  } while (!(P == b0 && Q == 2));
  return {length, q_cur, q_prev, log_product, b0};
}

// log eps+(delta) without the exact unit.
double log_unit(i64 delta) {
  const PeriodData pd = continued_fraction_period(delta, false);
  return pd.length % 2 ? 2.0 * pd.log_product : pd.log_product;
}

template <class Factorer>
i64 class_number_with(i64 delta, const Factorer& factor) {
  return static_cast<i64>(split_cycles(reduced_forms_unsorted(delta, factor), delta).starts.size());
}

}  // namespace

Form reduction_step(const Form& f, i64 delta) {
  const i64 s = static_cast<i64>(isqrt(static_cast<u64>(delta)));
  const i64 m = 2 * (f.c < 0 ? -f.c : f.c);
  const i64 lo = s - m + 1;
  const i64 b = lo + floor_mod(-f.b - lo, m);
  return {f.c, b, (b * b - delta) / (4 * f.c)};
}

PellSolution pell_solution(i64 delta) {
  require_indefinite(delta);
  const PeriodData pd = continued_fraction_period(delta, true);
  bigint t = pd.q_last * pd.b0 + 2 * pd.q_prev;
  bigint u = pd.q_last;
  double log_eps = pd.log_product;
  if (pd.length % 2) {
    // the unit has norm -1; its square is the norm +1 unit
    bigint t2 = (t * t + delta * u * u) / 2;
    u = t * u;
    t = std::move(t2);
    log_eps *= 2.0;
  }
  return {t, u, log_eps};
}

FormClassSet reduce_forms(i64 delta) {
  require_indefinite(delta);
  auto factor = [](u64 n) { return factorize(n); };
  Cycles cyc = split_cycles(reduced_forms_unsorted(delta, factor), delta);
  PellSolution pell = pell_solution(delta);
  FormClassSet out;
  out.delta = delta;
  out.class_number = static_cast<i64>(cyc.starts.size());
  out.reduced_forms = std::move(cyc.forms);
  out.cycle_starts = std::move(cyc.starts);
  out.regulator = pell.log_unit;
  out.fundamental_unit = std::exp(pell.log_unit);
  out.pell = std::move(pell);
  return out;
}

double trace_log_norm(i64 t) {
  const double td = static_cast<double>(t);
  return 2.0 * std::log((td + std::sqrt(td * td - 4.0)) / 2.0);
}

std::vector<double> trace_weights(i64 t_max) {
  if (t_max < 3) return {};
  const u64 n_max = static_cast<u64>((t_max * t_max - 4) / 4);
  const SpfTable spf(std::max<u64>(n_max, 16));
  auto factor = [&spf](u64 n) { return spf.factor(n); };
  const auto count = static_cast<std::size_t>(t_max - 2);
  return par::map<double>(count, [&](std::size_t i) {
    const i64 t = static_cast<i64>(i) + 3;
    // t^2 - 4 = (t - 2)(t + 2); collect exponents to enumerate u with u^2 | t^2 - 4
    std::unordered_map<u64, int> exps;
    for (const auto& pp : spf.factor(static_cast<u64>(t - 2))) exps[pp.prime] += pp.exponent;
    for (const auto& pp : spf.factor(static_cast<u64>(t + 2))) exps[pp.prime] += pp.exponent;
    Factorization half;
    for (const auto& [p, e] : exps)
      if (e >= 2) half.push_back({p, e / 2});
    std::sort(half.begin(), half.end(), [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
    const i64 disc = t * t - 4;
    std::vector<double> terms;
    for (u64 u : divisors(half)) {
      const i64 uu = static_cast<i64>(u * u);
      const i64 d = disc / uu;
      if (!is_discriminant(d)) continue;
      terms.push_back(static_cast<double>(class_number_with(d, factor)) * 2.0 * log_unit(d));
    }
    return par::pairwise_sum(terms);
  });
}

std::vector<GeodesicCount> psi_gamma_grid(const std::vector<double>& xs) {
  if (xs.empty()) return {};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] >= 2.0)) throw precondition_error("psi_gamma: x must be at least 2");
    if (xs[i] > 1e9) throw precondition_error("psi_gamma: x beyond desk scale (1e9)");
    if (i > 0 && xs[i] < xs[i - 1]) throw precondition_error("psi_gamma: grid must be nondecreasing");
  }
  const double x_max = xs.back();
  // N_t <= x  <=>  t <= sqrt(x) + 1/sqrt(x)
  i64 t_max = static_cast<i64>(std::floor(std::sqrt(x_max))) + 2;
  while (t_max >= 3 && trace_log_norm(t_max) > std::log(x_max)) --t_max;
  const std::vector<double> weights = trace_weights(t_max);

  std::vector<GeodesicCount> out;
  out.reserve(xs.size());
  std::size_t upto = 0;
  for (double x : xs) {
    const double log_x = std::log(x);
    while (upto < weights.size() && trace_log_norm(static_cast<i64>(upto) + 3) <= log_x) ++upto;
    const double psi = par::pairwise_sum(std::span<const double>(weights.data(), upto));
    out.push_back({x, psi, psi - x});
  }
  return out;
}

GeodesicCount psi_gamma(double x) { return psi_gamma_grid({x}).front(); }

// ---------------------------------------------------------------------------

namespace {

struct Mat {
  i64 a, b, c, d;
  friend bool operator==(const Mat&, const Mat&) = default;
};

struct MatHash {
  std::size_t operator()(const Mat& m) const {
    std::size_t h = std::hash<i64>{}(m.a);
    for (i64 v : {m.b, m.c, m.d}) h = h * 1000003u ^ std::hash<i64>{}(v);
    return h;
  }
};

i64 max_entry(const Mat& m) { return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)}); }

// T^{-1} g T and S^{-1} g S with T = (1 1; 0 1), S = (0 -1; 1 0).
Mat conj_t(const Mat& g) { return {g.a + g.c, g.b + g.d - g.a - g.c, g.c, g.d - g.c}; }
Mat conj_s(const Mat& g) { return {g.d, -g.c, -g.b, g.a}; }

std::vector<Mat> matrices_with_trace(i64 t, i64 box) {
  std::vector<Mat> out;
  for (i64 a = -box; a <= box; ++a) {
    const i64 d = t - a;
    if (std::abs(d) > box) continue;
    const i64 bc = a * d - 1;
    if (bc == 0) {
      for (i64 v = -box; v <= box; ++v) {
        out.push_back({a, 0, v, d});
        if (v != 0) out.push_back({a, v, 0, d});
      }
      continue;
    }
    for (i64 b = -box; b <= box; ++b) {
      if (b == 0 || bc % b != 0) continue;
      const i64 c = bc / b;
      if (std::abs(c) <= box) out.push_back({a, b, c, d});
    }
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent_[find(x)] = find(y); }

 private:
  std::vector<std::size_t> parent_;
};

// Representatives (one small matrix per class) of the trace-t classes,
// connected inside the given box.
std::vector<Mat> class_representatives(i64 t, i64 box) {
  const std::vector<Mat> mats = matrices_with_trace(t, box);
  std::unordered_map<Mat, std::size_t, MatHash> index;
  for (std::size_t i = 0; i < mats.size(); ++i) index.emplace(mats[i], i);
  UnionFind uf(mats.size());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (const Mat& nb : {conj_t(mats[i]), conj_s(mats[i])}) {
      const auto it = index.find(nb);
      if (it != index.end()) uf.unite(i, it->second);
    }
  }
  // Every class contains a matrix with entries at most t (one built from a
  // reduced form), so counting components that meet that core is enough.
  std::unordered_map<std::size_t, Mat> reps;
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (max_entry(mats[i]) <= t) reps.emplace(uf.find(i), mats[i]);
  std::vector<Mat> out;
  for (const auto& [root, m] : reps) out.push_back(m);
  return out;
}

// log-norm of the primitive root of g (trace t >= 3).
double primitive_log_norm(const Mat& g, i64 t) {
  for (i64 tp = 3; tp < t; ++tp) {
    // beta^k = u_k beta - u_{k-1} I, trace(beta^k) = u_{k+1} - u_{k-1}
    i64 u_prev = 0, u_cur = 1;
    for (int k = 1;; ++k) {
      const i64 u_next = tp * u_cur - u_prev;
      const i64 trace_k = u_next - u_prev;
      if (trace_k > t) break;
      if (k >= 2 && trace_k == t) {
        const bool integral = (g.a + u_prev) % u_cur == 0 && g.b % u_cur == 0 && g.c % u_cur == 0 &&
                              (g.d + u_prev) % u_cur == 0;
        if (integral) return trace_log_norm(tp);
      }
      u_prev = u_cur;
      u_cur = u_next;
    }
  }
  return trace_log_norm(t);
}

}  // namespace

double conjugacy_oracle(double x) {
  if (x > 500.0) throw precondition_error("conjugacy_oracle: x must be at most 500");
  if (x < 2.0) throw precondition_error("conjugacy_oracle: x must be at least 2");
  std::vector<double> contributions;
  for (i64 t = 3; trace_log_norm(t) <= std::log(x); ++t) {
    // Grow the box until the component count among small matrices is stable.
    i64 box = 2 * t;
    std::vector<Mat> reps = class_representatives(t, box);
    for (;;) {
      box *= 2;
      std::vector<Mat> next = class_representatives(t, box);
      const bool stable = next.size() == reps.size();
      reps = std::move(next);
      if (stable) break;
    }
    for (const Mat& g : reps) contributions.push_back(primitive_log_norm(g, t));
  }
  return par::pairwise_sum(contributions);
}

}  // namespace pgt
