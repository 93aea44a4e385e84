#include "monodyn/monomial_formulas.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "monodyn/errors.hpp"

namespace monodyn::formulas {

namespace {

void require_exponent(u64 n) {
  if (n < 2) throw std::domain_error("monomial exponent n must be at least 2");
  if (n > kMaxParameter) {
    throw ResourceLimitError("monomial exponent " + std::to_string(n) + " exceeds 2^31");
  }
}

// gcd(n^j - 1, modulus) without forming n^j; gcd(0, M) = M.
u64 gcd_power_minus_one(u64 n, u64 j, u64 modulus) {
  if (modulus == 1) return 1;
  const u64 t = nt::mod_pow(n, j, modulus);
  return std::gcd((t + modulus - 1) % modulus, modulus);
}

}  // namespace

FieldOrder::FieldOrder(u64 q) : q_(q), p_(0), s_(0) {
  if (q > kMaxParameter) {
    throw ResourceLimitError("field size " + std::to_string(q) + " exceeds 2^31");
  }
  const auto pp = nt::prime_power(q);
  if (!pp) throw std::domain_error(std::to_string(q) + " is not a prime power");
  p_ = pp->prime;
  s_ = pp->exponent;
}

u64 m_j(const FieldOrder& q, u64 n, u64 j) {
  require_exponent(n);
  if (j == 0) throw std::domain_error("m_j: j must be positive");
  return gcd_power_minus_one(n, j, q.value() - 1);
}

u64 q_star(const FieldOrder& q, u64 n) {
  require_exponent(n);
  return nt::coprime_part(q.value() - 1, n);
}

u64 r_hat(const FieldOrder& q, u64 n) {
  const u64 qs = q_star(q, n);
  return qs == 1 ? 1 : nt::multiplicative_order(n % qs, qs);
}

u64 periodic_count(const FieldOrder& q, u64 n, u64 r) {
  if (r == 0) throw std::domain_error("periodic_count: period must be positive");
  const auto fr = nt::factorize(r);
  std::int64_t sum = 0;
  for (u64 d : nt::divisors(fr)) {
    const int mu = nt::mobius(d);
    if (mu == 0) continue;
    sum += mu * static_cast<std::int64_t>(m_j(q, n, r / d) + 1);
  }
  if (sum < 0) {
    throw InvariantViolation("periodic_count: negative value for q=" +
                             std::to_string(q.value()) + " n=" + std::to_string(n) +
                             " r=" + std::to_string(r));
  }
  return static_cast<u64>(sum);
}

u64 cycle_count(const FieldOrder& q, u64 n, u64 r) {
  const u64 points = periodic_count(q, n, r);
  if (points % r != 0) {
    throw InvariantViolation("cycle_count: " + std::to_string(r) + " does not divide P = " +
                             std::to_string(points));
  }
  return points / r;
}

bool has_r_periodic(const FieldOrder& q, u64 n, u64 r) {
  if (r < 2) throw std::domain_error("has_r_periodic: r must be at least 2");
  const u64 mr = m_j(q, n, r);
  for (u64 j = 1; j < r; ++j) {
    if (m_j(q, n, j) % mr == 0) return false;
  }
  return true;
}

u64 sum_periodic(const FieldOrder& q, u64 n, u64 bound) {
  const u64 rh = r_hat(q, n);
  if (bound < rh) {
    throw std::domain_error("sum_periodic: bound " + std::to_string(bound) +
                            " is below the maximal cycle length " + std::to_string(rh));
  }
  u64 total = 0;
  for (u64 r = 1; r <= bound; ++r) total += periodic_count(q, n, r);
  if (total != q_star(q, n) + 1) {
    throw InvariantViolation("sum_periodic: total " + std::to_string(total) +
                             " differs from q*(n) + 1");
  }
  return total;
}

u64 total_cycles(const FieldOrder& q, u64 n) {
  u64 total = 0;
  for (u64 r : nt::divisors(r_hat(q, n))) total += cycle_count(q, n, r);
  return total;
}

bool is_fixed_point_system(const FieldOrder& q, u64 n) {
  return (n - 1) % q_star(q, n) == 0;
}

bool is_bijective(const FieldOrder& q, u64 n) {
  require_exponent(n);
  return std::gcd(q.value() - 1, n) == 1;
}

CycleProfile profile(const FieldOrder& q, u64 n) {
  CycleProfile out;
  out.q = q.value();
  out.n = n;
  out.q_star = q_star(q, n);
  out.r_hat = r_hat(q, n);
  for (u64 r : nt::divisors(out.r_hat)) {
    const u64 points = periodic_count(q, n, r);
    if (points == 0) continue;
    if (points % r != 0) throw InvariantViolation("profile: r does not divide P(r, q)");
    out.per_period[r] = points;
    out.per_length[r] = points / r;
    out.total_periodic += points;
    out.total_cycles += points / r;
  }
  if (out.total_periodic != out.q_star + 1) {
    throw InvariantViolation("profile: periodic total differs from q*(n) + 1");
  }
  return out;
}

}  // namespace monodyn::formulas
