#include "monodyn/mean_values.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "monodyn/errors.hpp"
#include "monodyn/numtheory.hpp"

namespace monodyn::mean {

namespace {

// n^k - 1 if n^k fits in 63 bits.
std::optional<u64> power_minus_one(u64 n, u64 k) {
  const auto power = nt::checked_pow(n, k);
  if (!power) return std::nullopt;
  return *power - 1;
}

u64 max_admissible_r(u64 n) {
  u64 r = 0;
  while (power_minus_one(n, r + 1)) ++r;
  return r;
}

void require_params(u64 r, u64 s, u64 n) {
  if (r == 0) throw std::domain_error("period r must be positive");
  if (s == 0) throw std::domain_error("extension degree s must be positive");
  if (n < 2) throw std::domain_error("exponent n must be at least 2");
}

// The terms of sum_{d | r} mu(d) (...): pairs (mu(d), n^{r/d} - 1).
struct MoebiusTerm {
  int mu;
  u64 modulus;
};

std::vector<MoebiusTerm> moebius_terms(u64 r, u64 n) {
  std::vector<MoebiusTerm> terms;
  for (u64 d : nt::divisors(r)) {
    const int mu = nt::mobius(d);
    if (mu == 0) continue;
    const auto m = power_minus_one(n, r / d);
    if (!m) {
      throw std::out_of_range("n^r - 1 exceeds 63 bits for n=" + std::to_string(n) +
                              ", r=" + std::to_string(r) + "; largest admissible r is " +
                              std::to_string(max_admissible_r(n)));
    }
    terms.push_back({mu, *m});
  }
  return terms;
}

// P(r, p^s) from the precomputed terms; gcd(n^k - 1, p^s - 1) is taken
// through p^s mod (n^k - 1), so p^s is never formed.
std::int64_t count_from_terms(const std::vector<MoebiusTerm>& terms, u64 s, u64 p) {
  std::int64_t total = 0;
  for (const auto& [mu, m] : terms) {
    u64 g = 1;
    if (m != 1) {
      const u64 t = nt::mod_pow(p, s, m);
      g = std::gcd((t + m - 1) % m, m);
    }
    total += mu * static_cast<std::int64_t>(g + 1);
  }
  return total;
}

u64 to_count(std::int64_t v, const char* what) {
  if (v < 0) throw InvariantViolation(std::string(what) + ": negative mean value");
  return static_cast<u64>(v);
}

}  // namespace

u64 analytic_I(u64 m, u64 s) {
  if (s == 0) throw std::domain_error("analytic_I: s must be positive");
  u64 total = 0;
  for (const auto& l : nt::divisor_factorizations(nt::factorize(m))) total += nt::v_s(s, l);
  return total;
}

u64 analytic_N(u64 r, u64 s, u64 n) {
  require_params(r, s, n);
  std::int64_t total = 0;
  for (const auto& [mu, m] : moebius_terms(r, n)) {
    total += mu * static_cast<std::int64_t>(analytic_I(m, s) + 1);
  }
  return to_count(total, "analytic_N");
}

Rational analytic_C_mean(u64 r, u64 s, u64 n) { return Rational(analytic_N(r, s, n), r); }

std::vector<Rational> gcd_class_densities(u64 m, u64 s) {
  const auto facs = nt::divisor_factorizations(nt::factorize(m));
  std::vector<u64> divs;
  std::vector<Rational> at_least;  // density of {p : l | p^s - 1}
  divs.reserve(facs.size());
  at_least.reserve(facs.size());
  for (const auto& l : facs) {
    divs.push_back(l.value);
    at_least.emplace_back(nt::v_s(s, l), nt::euler_phi(l));
  }
  return nt::invert_over_multiples<Rational>(divs, at_least);
}

u64 dirichlet_D(u64 r, u64 s, u64 n) {
  require_params(r, s, n);
  Rational total = 0;
  for (const auto& [mu, m] : moebius_terms(r, n)) {
    const auto divs = nt::divisors(m);
    const auto density = gcd_class_densities(m, s);
    Rational inner = 0;
    for (std::size_t i = 0; i < divs.size(); ++i) inner += Rational(divs[i] + 1) * density[i];
    total += mu * inner;
  }
  if (boost::multiprecision::denominator(total) != 1 || total < 0) {
    throw InvariantViolation("dirichlet_D: mean value is not a nonnegative integer");
  }
  return boost::multiprecision::numerator(total).convert_to<u64>();
}

std::int64_t periodic_count_over_prime(u64 r, u64 s, u64 n, u64 p) {
  require_params(r, s, n);
  return count_from_terms(moebius_terms(r, n), s, p);
}

std::vector<u64> default_checkpoints(u64 t_max) {
  std::vector<u64> out;
  for (u64 t = 10; t < t_max; t *= 10) out.push_back(t);
  out.push_back(t_max);
  return out;
}

MeanSweepReport empirical_mean(u64 r, u64 s, u64 n, u64 t_max, const SweepOptions& options) {
  require_params(r, s, n);
  if (t_max < 2) throw std::domain_error("empirical_mean: t_max must be at least 2");
  if (t_max > nt::kMaxSieve) {
    throw ResourceLimitError("empirical_mean: t_max exceeds 10^8");
  }
  std::vector<u64> cps = options.checkpoints.empty() ? default_checkpoints(t_max)
                                                     : options.checkpoints;
  cps.push_back(t_max);
  std::sort(cps.begin(), cps.end());
  cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
  if (cps.front() < 2 || cps.back() > t_max) {
    throw std::domain_error("empirical_mean: checkpoints must lie in [2, t_max]");
  }

  const auto terms = moebius_terms(r, n);
  const auto primes = nt::primes_up_to(t_max);

  // Partial sums per checkpoint bucket, one vector per block.
  const unsigned workers = std::max(1U, options.threads);
  const std::size_t block = (primes.size() + workers - 1) / workers;
  std::vector<std::vector<std::int64_t>> partial(workers,
                                                 std::vector<std::int64_t>(cps.size(), 0));
  auto run_block = [&](unsigned w) {
    const std::size_t begin = std::min(primes.size(), w * block);
    const std::size_t end = std::min(primes.size(), begin + block);
    if (begin == end) return;
    std::size_t bucket = static_cast<std::size_t>(
        std::lower_bound(cps.begin(), cps.end(), primes[begin]) - cps.begin());
    auto& local = partial[w];
    for (std::size_t i = begin; i < end; ++i) {
      const u64 p = primes[i];
      while (cps[bucket] < p) ++bucket;
      local[bucket] += count_from_terms(terms, s, p);
    }
  };
  if (workers == 1) {
    run_block(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_block, w);
  }

  MeanSweepReport report;
  report.n = n;
  report.s = s;
  report.r = r;
  report.t_max = t_max;
  report.analytic = Rational(analytic_N(r, s, n));
  std::int64_t running = 0;
  for (std::size_t b = 0; b < cps.size(); ++b) {
    for (const auto& local : partial) running += local[b];
    Checkpoint cp;
    cp.t = cps[b];
    cp.pi_t = static_cast<u64>(std::upper_bound(primes.begin(), primes.end(), cps[b]) -
                               primes.begin());
    cp.empirical_sum = running;
    cp.empirical_mean = Rational(running, static_cast<std::int64_t>(cp.pi_t));
    report.checkpoints.push_back(std::move(cp));
  }
  report.final_abs_error = abs_diff(report.checkpoints.back().empirical_mean, report.analytic);
  return report;
}

DivergenceSeries divergence_probe(u64 s, u64 n, u64 R) {
  if (R == 0) throw std::domain_error("divergence_probe: R must be positive");
  if (!power_minus_one(n, R)) {
    throw std::out_of_range("divergence_probe: n^R - 1 exceeds 63 bits; largest R is " +
                            std::to_string(max_admissible_r(n)));
  }
  DivergenceSeries out;
  Rational periodic = 0, cycles = 0;
  for (u64 r = 1; r <= R; ++r) {
    const Rational term(analytic_N(r, s, n));
    periodic += term;
    cycles += term / r;
    out.r.push_back(r);
    out.term.push_back(term);
    out.periodic_sum.push_back(periodic);
    out.cycle_sum.push_back(cycles);
  }
  return out;
}

}  // namespace monodyn::mean
