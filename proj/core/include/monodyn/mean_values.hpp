#pragma once

#include <cstdint>
#include <vector>

#include "monodyn/exact.hpp"

// Averages of P(r, p^s) over the primes p, for f(x) = x^n.
//
// The analytic value N(r, s) = sum_{d | r} mu(d) (I(n^{r/d} - 1, s) + 1),
// with I(m, s) = sum_{l | m} v_s(l), is computed two ways: directly, and
// through the densities of the prime sets {p : gcd(m, p^s - 1) = l}
// (dirichlet_D). The empirical side sums P(r, p^s) exactly over a sieve.

namespace monodyn::mean {

using u64 = std::uint64_t;

/// I(m, s) = sum_{l | m} v_s(l). Equals tau(m) for s = 1.
[[nodiscard]] u64 analytic_I(u64 m, u64 s);

/// N(r, s) for x^n. Throws std::out_of_range when n^r - 1 exceeds 63 bits
/// (the message names the largest admissible r).
[[nodiscard]] u64 analytic_N(u64 r, u64 s, u64 n);

/// N(r, s) / r.
[[nodiscard]] Rational analytic_C_mean(u64 r, u64 s, u64 n);

/// Same value as analytic_N, evaluated through prime-set densities:
/// delta({p : l | p^s - 1}) = v_s(l) / phi(l), inverted over multiples to get
/// delta({p : gcd(m, p^s - 1) = l}), then sum_l (l + 1) * delta.
[[nodiscard]] u64 dirichlet_D(u64 r, u64 s, u64 n);

/// Density of {p : gcd(m, p^s - 1) = l} for each divisor l of m, ordered
/// like nt::divisors(m).
[[nodiscard]] std::vector<Rational> gcd_class_densities(u64 m, u64 s);

struct Checkpoint {
  u64 t = 0;
  u64 pi_t = 0;
  std::int64_t empirical_sum = 0;  ///< sum of P(r, p^s) over p <= t
  Rational empirical_mean;         ///< empirical_sum / pi_t
};

struct MeanSweepReport {
  u64 n = 0;
  u64 s = 0;
  u64 r = 0;
  u64 t_max = 0;
  Rational analytic;
  std::vector<Checkpoint> checkpoints;  ///< strictly increasing in t, last is t_max
  Rational final_abs_error;
};

struct SweepOptions {
  std::vector<u64> checkpoints;  ///< empty: powers of 10 below t_max, then t_max
  unsigned threads = 1;
};

/// P(r, p^s) for a single prime, never forming p^s.
[[nodiscard]] std::int64_t periodic_count_over_prime(u64 r, u64 s, u64 n, u64 p);

/// Exact prime sweep. Blocks of primes are summed on `threads` workers and
/// reduced by integer addition, so the result does not depend on scheduling.
/// Throws ResourceLimitError for t_max > 10^8, std::out_of_range when some
/// n^{r/d} - 1 exceeds 63 bits.
[[nodiscard]] MeanSweepReport empirical_mean(u64 r, u64 s, u64 n, u64 t_max,
                                             const SweepOptions& options = {});

/// Default checkpoint schedule: 10, 100, ... below t_max, then t_max.
[[nodiscard]] std::vector<u64> default_checkpoints(u64 t_max);

struct DivergenceSeries {
  std::vector<u64> r;                 ///< 1..R
  std::vector<Rational> term;         ///< N(r, s) (or D(r, K))
  std::vector<Rational> periodic_sum;  ///< partial sums of term
  std::vector<Rational> cycle_sum;     ///< partial sums of term / r
};

/// Partial sums of N(r, s) and N(r, s) / r for r = 1..R.
[[nodiscard]] DivergenceSeries divergence_probe(u64 s, u64 n, u64 R);

}  // namespace monodyn::mean
