#pragma once

#include <cstdint>
#include <map>

#include "monodyn/numtheory.hpp"

// Closed forms for the dynamics of f(x) = x^n on F_q. Everything here is
// integer arithmetic on (q, n); no field element is ever built.
//
//   m_j       gcd(n^j - 1, q - 1): nonzero solutions of f^j(x) = x
//   q*(n)     largest divisor of q - 1 coprime to n: nonzero periodic points
//   r^(n)     order of n modulo q*(n): longest cycle
//   P(r, q)   sum_{d | r} mu(d) (m_{r/d} + 1): points of exact period r
//   C(r, q)   P(r, q) / r: cycles of length r

namespace monodyn::formulas {

using u64 = std::uint64_t;

/// Largest q and n accepted by the formula engine.
inline constexpr u64 kMaxParameter = u64{1} << 31;

/// A validated field size q = p^s, 2 <= q <= 2^31.
class FieldOrder {
 public:
  /// Throws std::domain_error if q is not a prime power and
  /// ResourceLimitError if q > kMaxParameter.
  explicit FieldOrder(u64 q);

  [[nodiscard]] u64 value() const { return q_; }
  [[nodiscard]] u64 characteristic() const { return p_; }
  [[nodiscard]] unsigned degree() const { return s_; }

 private:
  u64 q_;
  u64 p_;
  unsigned s_;
};

/// Exact period and cycle counts for one system.
struct CycleProfile {
  u64 q = 0;
  u64 n = 0;
  u64 q_star = 0;
  u64 r_hat = 0;
  std::map<u64, u64> per_period;  ///< r -> P(r, q), only r | r^ with P > 0
  std::map<u64, u64> per_length;  ///< r -> C(r, q), same keys
  u64 total_periodic = 0;
  u64 total_cycles = 0;

  friend bool operator==(const CycleProfile&, const CycleProfile&) = default;
};

[[nodiscard]] u64 m_j(const FieldOrder& q, u64 n, u64 j);
[[nodiscard]] u64 q_star(const FieldOrder& q, u64 n);
[[nodiscard]] u64 r_hat(const FieldOrder& q, u64 n);

/// P(r, q) by Moebius inversion. Throws InvariantViolation if the sum is
/// negative (it never is).
[[nodiscard]] u64 periodic_count(const FieldOrder& q, u64 n, u64 r);

/// C(r, q) = P(r, q) / r. Throws InvariantViolation if r does not divide P.
[[nodiscard]] u64 cycle_count(const FieldOrder& q, u64 n, u64 r);

/// Existence of an r-cycle via the divisibility test on m_j, 1 <= j < r.
/// Throws std::domain_error for r < 2.
[[nodiscard]] bool has_r_periodic(const FieldOrder& q, u64 n, u64 r);

/// sum_{r=1}^{bound} P(r, q). Requires bound >= r^(n); the result is
/// checked against q*(n) + 1.
[[nodiscard]] u64 sum_periodic(const FieldOrder& q, u64 n, u64 bound);

[[nodiscard]] u64 total_cycles(const FieldOrder& q, u64 n);
[[nodiscard]] bool is_fixed_point_system(const FieldOrder& q, u64 n);
[[nodiscard]] bool is_bijective(const FieldOrder& q, u64 n);

[[nodiscard]] CycleProfile profile(const FieldOrder& q, u64 n);

}  // namespace monodyn::formulas
