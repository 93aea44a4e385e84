#include "monodyn/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "monodyn/errors.hpp"

namespace monodyn::nt {

namespace {

__extension__ using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

void require_factorizable(u64 m) {
  if (m == 0 || m > kMaxInput) {
    throw std::out_of_range("factorize: argument must lie in [1, 2^63-1], got " +
                            std::to_string(m));
  }
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned r) {
  u64 x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    u64 y = 2, x = 2, ys = 2, g = 1, q = 1;
    constexpr u64 kBatch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 mod_pow(u64 base, u64 exp, u64 modulus) {
  if (modulus == 0) throw std::domain_error("mod_pow: modulus must be positive");
  u64 result = 1 % modulus;
  base %= modulus;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  // This witness set is exact below 3.3e24.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

Factorization factorize(u64 m) {
  require_factorizable(m);
  Factorization f;
  f.value = m;
  u64 rest = m;
  auto take = [&](u64 p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e != 0) f.factors.push_back({p, e});
  };
  take(2);
  take(3);
  // 6k +- 1 wheel.
  for (u64 p = 5; p <= kTrialLimit && p * p <= rest; p += 6) {
    take(p);
    take(p + 2);
  }
  if (rest > 1) {
    std::vector<u64> primes;
    split(rest, primes);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
      std::size_t j = i;
      while (j < primes.size() && primes[j] == primes[i]) ++j;
      f.factors.push_back({primes[i], static_cast<unsigned>(j - i)});
      i = j;
    }
  }
  return f;
}

std::optional<PrimePower> prime_power(u64 m) {
  if (m < 2 || m > kMaxInput) return std::nullopt;
  const auto f = factorize(m);
  if (f.factors.size() != 1) return std::nullopt;
  return f.factors.front();
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> divisors(u64 m) { return divisors(factorize(m)); }

std::vector<Factorization> divisor_factorizations(const Factorization& f) {
  std::vector<Factorization> out{Factorization{}};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base = out.size();
    for (unsigned k = 1; k <= e; ++k) {
      for (std::size_t i = 0; i < base; ++i) {
        Factorization d = out[i];
        for (unsigned j = 0; j < k; ++j) d.value *= p;
        d.factors.push_back({p, k});
        out.push_back(std::move(d));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Factorization& a, const Factorization& b) { return a.value < b.value; });
  return out;
}

int mobius(const Factorization& f) {
  for (const auto& pp : f.factors) {
    if (pp.exponent > 1) return 0;
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

int mobius(u64 m) { return mobius(factorize(m)); }

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, e] : f.factors) {
    phi *= p - 1;
    for (unsigned k = 1; k < e; ++k) phi *= p;
  }
  return phi;
}

u64 euler_phi(u64 m) { return euler_phi(factorize(m)); }

u64 tau(const Factorization& f) {
  u64 t = 1;
  for (const auto& pp : f.factors) t *= pp.exponent + 1;
  return t;
}

u64 tau(u64 m) { return tau(factorize(m)); }

u64 multiplicative_order(u64 a, u64 m, const Factorization& phi_factors) {
  if (m == 0) throw std::domain_error("multiplicative_order: modulus must be positive");
  if (m == 1) return 1;
  if (std::gcd(a % m, m) != 1) {
    throw std::domain_error("multiplicative_order: gcd(" + std::to_string(a) + ", " +
                            std::to_string(m) + ") != 1");
  }
  u64 order = phi_factors.value;
  for (const auto& [p, e] : phi_factors.factors) {
    for (unsigned k = 0; k < e && order % p == 0; ++k) {
      if (mod_pow(a, order / p, m) != 1) break;
      order /= p;
    }
  }
  return order;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m == 0) throw std::domain_error("multiplicative_order: modulus must be positive");
  if (m == 1) return 1;
  return multiplicative_order(a, m, factorize(euler_phi(m)));
}

u64 v_s(u64 s, const Factorization& l) {
  if (s == 0) throw std::domain_error("v_s: exponent must be positive");
  u64 count = 1;
  for (const auto& [p, e] : l.factors) {
    if (p == 2) {
      if (e == 2) {
        count *= std::gcd(s, u64{2});
      } else if (e >= 3) {
        count *= std::gcd(s, u64{2}) * std::gcd(s, u64{1} << (e - 2));
      }
    } else {
      u64 phi = p - 1;
      for (unsigned k = 1; k < e; ++k) phi *= p;
      count *= std::gcd(s, phi);
    }
  }
  return count;
}

u64 v_s(u64 s, u64 l) { return v_s(s, factorize(l)); }

u64 coprime_part(u64 m, u64 n) {
  if (m == 0 || n == 0) throw std::domain_error("coprime_part: arguments must be positive");
  // Repeatedly divide out gcd(m, n); never needs a factorization.
  for (u64 g = std::gcd(m, n); g != 1; g = std::gcd(m, g)) {
    while (m % g == 0) m /= g;
  }
  return m;
}

std::vector<u64> primes_up_to(u64 t) {
  if (t < 2) throw std::domain_error("primes_up_to: bound must be at least 2");
  if (t > kMaxSieve) {
    throw ResourceLimitError("primes_up_to: bound " + std::to_string(t) +
                             " exceeds cap " + std::to_string(kMaxSieve));
  }
  // Odd-only sieve: bit i stands for 2i + 1.
  const u64 half = (t + 1) / 2;
  std::vector<bool> composite(half, false);
  for (u64 i = 1; (2 * i + 1) * (2 * i + 1) <= t; ++i) {
    if (composite[i]) continue;
    const u64 p = 2 * i + 1;
    for (u64 j = p * p / 2; j < half; j += p) composite[j] = true;
  }
  std::vector<u64> primes{2};
  for (u64 i = 1; i < half; ++i) {
    if (!composite[i]) primes.push_back(2 * i + 1);
  }
  return primes;
}

std::optional<u64> checked_pow(u64 base, u64 exp) {
  u128 acc = 1;
  for (u64 i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > kMaxInput) return std::nullopt;
    if (base <= 1) break;
  }
  return static_cast<u64>(acc);
}

}  // namespace monodyn::nt
