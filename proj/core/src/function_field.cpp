#include "monodyn/function_field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "monodyn/errors.hpp"
#include "monodyn/monomial_formulas.hpp"
#include "monodyn/numtheory.hpp"

namespace monodyn::ffield {

namespace {

u64 checked_q(u64 q) { return formulas::FieldOrder(q).value(); }

// pi_q(d) for d = 1..t_max, index d - 1, from one table of powers of q.
std::vector<BigInt> necklace_table(u64 q, u64 t_max) {
  std::vector<BigInt> power(t_max + 1);
  power[0] = 1;
  for (u64 k = 1; k <= t_max; ++k) power[k] = power[k - 1] * q;
  std::vector<BigInt> counts;
  counts.reserve(t_max);
  for (u64 d = 1; d <= t_max; ++d) {
    BigInt sum = 0;
    for (u64 e : nt::divisors(d)) {
      const int mu = nt::mobius(e);
      if (mu == 1) sum += power[d / e];
      if (mu == -1) sum -= power[d / e];
    }
    counts.push_back(sum / d);
  }
  return counts;
}

void require_degree(u64 d, const char* what) {
  if (d == 0) throw std::domain_error(std::string(what) + ": degree must be positive");
  if (d > nt::kMaxInput) throw std::out_of_range(std::string(what) + ": degree too large");
}

// "strictly decreasing, or already exact" over the last three entries.
bool tail_decreasing(const std::vector<Rational>& errors) {
  if (errors.size() < 3) return false;
  for (std::size_t i = errors.size() - 2; i < errors.size(); ++i) {
    if (!(errors[i] < errors[i - 1] || errors[i] == 0)) return false;
  }
  return true;
}

}  // namespace

u64 irreducible_count(u64 q, u64 d) {
  checked_q(q);
  require_degree(d, "irreducible_count");
  if (!nt::checked_pow(q, d)) {
    throw std::out_of_range("irreducible_count: q^d exceeds 63 bits for q=" +
                            std::to_string(q) + ", d=" + std::to_string(d));
  }
  return irreducible_count_exact(q, d).convert_to<u64>();
}

BigInt irreducible_count_exact(u64 q, u64 d) {
  checked_q(q);
  require_degree(d, "irreducible_count_exact");
  BigInt sum = 0;
  for (u64 e : nt::divisors(d)) {
    const int mu = nt::mobius(e);
    if (mu == 0) continue;
    const BigInt term = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d / e));
    sum += mu == 1 ? term : BigInt(-term);
  }
  return sum / d;
}

BigInt pi_K(u64 q, u64 t) {
  checked_q(q);
  if (t == 0) return 0;
  if (t > kMaxSeriesLength) throw ResourceLimitError("pi_K: t exceeds 4096");
  BigInt total = 0;
  for (const auto& c : necklace_table(q, t)) total += c;
  return total;
}

u64 split_degree(u64 q, u64 r) {
  checked_q(q);
  if (r == 0) throw std::domain_error("split_degree: r must be positive");
  if (std::gcd(q, r) != 1) {
    throw std::domain_error("split_degree: gcd(q, r) > 1, no prime splits completely");
  }
  return nt::multiplicative_order(q % r, r);
}

SplitCount C_r_count(u64 q, u64 r, u64 t) {
  checked_q(q);
  if (r == 0) throw std::domain_error("C_r_count: r must be positive");
  SplitCount out;
  if (std::gcd(q, r) != 1) {
    out.empty_set = true;
    return out;
  }
  if (t == 0) return out;
  if (t > kMaxSeriesLength) throw ResourceLimitError("C_r_count: t exceeds 4096");
  const u64 l = split_degree(q, r);
  if (l > t) return out;
  const auto counts = necklace_table(q, t);
  for (u64 d = l; d <= t; d += l) out.count += counts[d - 1];
  return out;
}

SubsequenceLimits subsequence_limits(u64 q, u64 r) {
  SubsequenceLimits out;
  out.l_r = split_degree(q, r);
  if (out.l_r == 1) {
    out.limit_A = 1;
    out.limit_B = 1;
    return out;
  }
  if (out.l_r > kMaxSeriesLength) {
    throw ResourceLimitError("subsequence_limits: l_r exceeds 4096");
  }
  const BigInt ql = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(out.l_r));
  out.limit_B = Rational(BigInt(q - 1), ql - 1);
  out.limit_A = out.limit_B * Rational(ql / q);
  return out;
}

FFDensityReport oscillation_experiment(u64 q, u64 r, u64 t_max) {
  if (t_max == 0) throw std::domain_error("oscillation_experiment: t_max must be positive");
  if (t_max > kMaxSeriesLength) {
    throw ResourceLimitError("oscillation_experiment: t_max " + std::to_string(t_max) +
                             " exceeds cap " + std::to_string(kMaxSeriesLength));
  }
  const SubsequenceLimits limits = subsequence_limits(q, r);
  FFDensityReport rep;
  rep.q = q;
  rep.r = r;
  rep.l_r = limits.l_r;
  rep.t_max = t_max;
  rep.limit_A = limits.limit_A;
  rep.limit_B = limits.limit_B;

  const u64 l = limits.l_r;
  const auto counts = necklace_table(q, t_max);
  std::vector<Rational> err_A, err_B;
  BigInt pi = 0, split = 0;
  rep.series.reserve(t_max);
  for (u64 t = 1; t <= t_max; ++t) {
    pi += counts[t - 1];
    if (t % l == 0) split += counts[t - 1];
    SeriesPoint pt;
    pt.t = t;
    pt.pi_K = pi;
    pt.C_r = split;
    pt.ratio = Rational(split, pi);
    if (t % l == 0) {
      pt.tag = Subsequence::kA;
      err_A.push_back(abs_diff(pt.ratio, rep.limit_A));
    } else if ((t + 1) % l == 0) {
      pt.tag = Subsequence::kB;
      err_B.push_back(abs_diff(pt.ratio, rep.limit_B));
    }
    rep.series.push_back(std::move(pt));
  }
  // With l = 1 the two subsequences coincide.
  if (l == 1) err_B = err_A;

  if (!err_A.empty()) rep.final_error_A = err_A.back();
  if (!err_B.empty()) rep.final_error_B = err_B.back();
  rep.tail_monotone_A = tail_decreasing(err_A);
  rep.tail_monotone_B = tail_decreasing(err_B);

  const std::size_t window = std::min<std::size_t>(l, rep.series.size());
  auto first = rep.series.end() - static_cast<std::ptrdiff_t>(window);
  Rational lo = first->ratio, hi = first->ratio;
  for (auto it = first; it != rep.series.end(); ++it) {
    lo = std::min(lo, it->ratio);
    hi = std::max(hi, it->ratio);
  }
  rep.tail_spread = hi - lo;
  return rep;
}

Rational dirichlet_density_S(u64 q, u64 r) { return Rational(1, split_degree(q, r)); }

Rational dirichlet_mean_solutions(u64 q, u64 m) {
  checked_q(q);
  if (m == 0) throw std::domain_error("dirichlet_mean_solutions: m must be positive");
  const u64 m_star = nt::coprime_part(m, q);
  Rational total = 0;
  for (const auto& k : nt::divisor_factorizations(nt::factorize(m_star))) {
    const u64 phi = nt::euler_phi(k);
    const u64 order =
        k.value == 1 ? 1 : nt::multiplicative_order(q % k.value, k.value, nt::factorize(phi));
    total += Rational(phi, order);
  }
  return total;
}

Rational dirichlet_D_K(u64 q, u64 n, u64 r) {
  checked_q(q);
  if (n < 2) throw std::domain_error("dirichlet_D_K: n must be at least 2");
  if (r == 0) throw std::domain_error("dirichlet_D_K: r must be positive");
  Rational total = 0;
  for (u64 d : nt::divisors(r)) {
    const int mu = nt::mobius(d);
    if (mu == 0) continue;
    const auto power = nt::checked_pow(n, r / d);
    if (!power) {
      throw std::out_of_range("dirichlet_D_K: n^r - 1 exceeds 63 bits for n=" +
                              std::to_string(n) + ", r=" + std::to_string(r));
    }
    total += mu * (dirichlet_mean_solutions(q, *power - 1) + 1);
  }
  return total;
}

Rational dirichlet_C_K(u64 q, u64 n, u64 r) { return dirichlet_D_K(q, n, r) / r; }

mean::DivergenceSeries divergence_probe_K(u64 q, u64 n, u64 R) {
  if (R == 0) throw std::domain_error("divergence_probe_K: R must be positive");
  if (n < 2) throw std::domain_error("divergence_probe_K: n must be at least 2");
  if (!nt::checked_pow(n, R)) {
    throw std::out_of_range("divergence_probe_K: n^R - 1 exceeds 63 bits");
  }
  mean::DivergenceSeries out;
  Rational periodic = 0, cycles = 0;
  for (u64 r = 1; r <= R; ++r) {
    const Rational term = dirichlet_D_K(q, n, r);
    periodic += term;
    cycles += term / r;
    out.r.push_back(r);
    out.term.push_back(term);
    out.periodic_sum.push_back(periodic);
    out.cycle_sum.push_back(cycles);
  }
  return out;
}

FixedPointOscillation fixed_point_oscillation(u64 q, u64 n, u64 t_max) {
  checked_q(q);
  if (n < 3) throw std::domain_error("fixed_point_oscillation: n - 1 must be prime");
  const u64 l = n - 1;
  if (!nt::is_prime(l)) throw std::domain_error("fixed_point_oscillation: n - 1 must be prime");
  if (std::gcd(l, q) != 1) {
    throw std::domain_error("fixed_point_oscillation: n - 1 must be coprime to q");
  }
  if ((q - 1) % l == 0) {
    throw std::domain_error("fixed_point_oscillation: n - 1 divides q - 1, the mean exists");
  }
  FixedPointOscillation out;
  out.density = oscillation_experiment(q, l, t_max);
  out.mean_limit_A = 2 + (l - 1) * out.density.limit_A;
  out.mean_limit_B = 2 + (l - 1) * out.density.limit_B;
  return out;
}

}  // namespace monodyn::ffield
