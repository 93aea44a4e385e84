#pragma once

#include <cstdint>
#include <vector>

#include "monodyn/exact.hpp"
#include "monodyn/mean_values.hpp"

// Prime counting and densities over the rational function field K = F_q(T).
// Primes of K are the monic irreducibles of F_q[T] and a prime of degree d has
// norm q^d, so r | (|P| - 1) exactly when l_r = ord_r(q) divides d. Every
// function here takes the constant field size q alone.

namespace monodyn::ffield {

using u64 = std::uint64_t;

/// Longest series accepted by oscillation_experiment.
inline constexpr u64 kMaxSeriesLength = 4096;

/// Number of monic irreducibles of degree d over F_q (necklace formula).
/// Throws std::out_of_range if q^d exceeds 63 bits.
[[nodiscard]] u64 irreducible_count(u64 q, u64 d);

/// Same count without the 63-bit restriction.
[[nodiscard]] BigInt irreducible_count_exact(u64 q, u64 d);

/// pi_K(t): primes of degree at most t.
[[nodiscard]] BigInt pi_K(u64 q, u64 t);

/// l_r, the order of q modulo r. Throws std::domain_error if gcd(q, r) > 1.
[[nodiscard]] u64 split_degree(u64 q, u64 r);

struct SplitCount {
  BigInt count;            ///< primes P with deg P <= t and r | |P| - 1
  bool empty_set = false;  ///< gcd(r, q) > 1: no prime qualifies at any t
};

[[nodiscard]] SplitCount C_r_count(u64 q, u64 r, u64 t);

struct SubsequenceLimits {
  u64 l_r = 1;
  Rational limit_A;  ///< along t = k l_r
  Rational limit_B;  ///< along t = (k + 1) l_r - 1
};

/// A = q^{l-1}(q-1)/(q^l - 1), B = (q-1)/(q^l - 1), both 1 when l = 1.
[[nodiscard]] SubsequenceLimits subsequence_limits(u64 q, u64 r);

enum class Subsequence : char { kA = 'A', kB = 'B', kNone = '-' };

struct SeriesPoint {
  u64 t = 0;
  BigInt pi_K;
  BigInt C_r;
  Rational ratio;  ///< C_r / pi_K
  Subsequence tag = Subsequence::kNone;
};

/// The ratio C(r, P_K(t)) / pi_K(t) for t = 1..t_max. No single density value
/// is reported for l_r > 1; only the series and the two subsequence limits.
struct FFDensityReport {
  u64 q = 0;
  u64 r = 0;
  u64 l_r = 1;
  u64 t_max = 0;
  std::vector<SeriesPoint> series;
  Rational limit_A;
  Rational limit_B;
  Rational final_error_A;  ///< at the last t tagged A
  Rational final_error_B;  ///< at the last t tagged B
  /// Error strictly decreases over the last three points of each subsequence.
  bool tail_monotone_A = false;
  bool tail_monotone_B = false;
  /// max - min of the ratio over the last l_r terms.
  Rational tail_spread;
};

/// Exact series. Requires gcd(r, q) = 1 (std::domain_error) and
/// 1 <= t_max <= kMaxSeriesLength (ResourceLimitError above the cap).
/// For l_r = 1 every t is tagged A.
[[nodiscard]] FFDensityReport oscillation_experiment(u64 q, u64 r, u64 t_max);

/// Dirichlet density of primes with r | |P| - 1: 1 / l_r.
/// Throws std::domain_error if gcd(q, r) > 1 (the set is empty).
[[nodiscard]] Rational dirichlet_density_S(u64 q, u64 r);

/// Dirichlet mean of the number of solutions of x^m = 1 over the residue
/// fields: sum over r | m* of phi(r) / l_r, with m* the part of m coprime to q.
[[nodiscard]] Rational dirichlet_mean_solutions(u64 q, u64 m);

/// D(r, K) = sum_{d | r} mu(d) (dirichlet_mean_solutions(q, n^{r/d} - 1) + 1).
/// Throws std::out_of_range if n^r - 1 exceeds 63 bits.
[[nodiscard]] Rational dirichlet_D_K(u64 q, u64 n, u64 r);

/// C(r, K) = D(r, K) / r.
[[nodiscard]] Rational dirichlet_C_K(u64 q, u64 n, u64 r);

/// Partial sums of D(r, K) and C(r, K) for r = 1..R.
[[nodiscard]] mean::DivergenceSeries divergence_probe_K(u64 q, u64 n, u64 R);

/// Fixed points of x^n with n - 1 = l prime: 2 + (l - 1) [l | |P| - 1] per
/// prime, so the running mean over deg P <= t moves with the density series
/// for r = l. Requires l prime, gcd(l, q) = 1 and l not dividing q - 1;
/// otherwise std::domain_error.
struct FixedPointOscillation {
  FFDensityReport density;
  Rational mean_limit_A;  ///< 2 + (l - 1) limit_A
  Rational mean_limit_B;  ///< 2 + (l - 1) limit_B
};

[[nodiscard]] FixedPointOscillation fixed_point_oscillation(u64 q, u64 n, u64 t_max);

}  // namespace monodyn::ffield
