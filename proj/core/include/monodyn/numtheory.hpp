#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace monodyn::nt {

using u64 = std::uint64_t;

/// Largest integer accepted by the factorization routines (2^63 - 1).
inline constexpr u64 kMaxInput = (u64{1} << 63) - 1;

/// Upper bound for primes_up_to.
inline constexpr u64 kMaxSieve = 100'000'000;

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
struct Factorization {
  u64 value = 1;
  std::vector<PrimePower> factors;

  /// Number of distinct prime factors.
  [[nodiscard]] std::size_t omega() const { return factors.size(); }
};

/// (a * b) mod m without overflow. Requires m >= 1.
[[nodiscard]] u64 mul_mod(u64 a, u64 b, u64 m);

/// base^exp mod modulus by repeated squaring. mod_pow(b, 0, m) == 1 % m.
/// Throws std::domain_error when modulus == 0.
[[nodiscard]] u64 mod_pow(u64 base, u64 exp, u64 modulus);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
[[nodiscard]] bool is_prime(u64 n);

/// Trial division up to 10^6, then Pollard rho (Brent) on the cofactor.
/// Throws std::out_of_range for m == 0 or m > 2^63 - 1.
[[nodiscard]] Factorization factorize(u64 m);

/// If m is p^s for a prime p, returns {p, s}.
[[nodiscard]] std::optional<PrimePower> prime_power(u64 m);

[[nodiscard]] std::vector<u64> divisors(const Factorization& f);
[[nodiscard]] std::vector<u64> divisors(u64 m);

/// Factorizations of every divisor, ordered by value (matches divisors()).
[[nodiscard]] std::vector<Factorization> divisor_factorizations(const Factorization& f);

[[nodiscard]] int mobius(const Factorization& f);
[[nodiscard]] int mobius(u64 m);

[[nodiscard]] u64 euler_phi(const Factorization& f);
[[nodiscard]] u64 euler_phi(u64 m);

[[nodiscard]] u64 tau(const Factorization& f);
[[nodiscard]] u64 tau(u64 m);

/// Least l >= 1 with a^l == 1 (mod m). Strips prime factors from phi(m).
/// multiplicative_order(a, 1) == 1. Throws std::domain_error if gcd(a, m) != 1.
[[nodiscard]] u64 multiplicative_order(u64 a, u64 m);

/// Same, with the factorization of the group exponent candidate supplied.
/// `phi_factors` must factor a multiple of the order (usually phi(m)).
[[nodiscard]] u64 multiplicative_order(u64 a, u64 m,
                                       const Factorization& phi_factors);

/// Number of x in Z/lZ with x^s == 1.
[[nodiscard]] u64 v_s(u64 s, u64 l);
[[nodiscard]] u64 v_s(u64 s, const Factorization& l);

/// Largest divisor of m coprime to n.
[[nodiscard]] u64 coprime_part(u64 m, u64 n);

/// Sieve of Eratosthenes. Requires 2 <= t <= kMaxSieve; a larger t throws
/// ResourceLimitError, t < 2 throws std::domain_error.
[[nodiscard]] std::vector<u64> primes_up_to(u64 t);

/// base^exp if it fits in 63 bits.
[[nodiscard]] std::optional<u64> checked_pow(u64 base, u64 exp);

/// Moebius inversion over multiples inside the divisor lattice of m:
/// given g(r) = sum_{kr | m} h(kr) for every r | m, returns
/// h(r) = sum_{kr | m} mu(k) g(kr). `divs` must be the sorted divisors of m
/// and g[i] the value at divs[i].
template <class T>
[[nodiscard]] std::vector<T> invert_over_multiples(std::span<const u64> divs,
                                                   std::span<const T> g) {
  if (divs.size() != g.size()) {
    throw std::domain_error("invert_over_multiples: size mismatch");
  }
  std::vector<T> h(divs.size(), T(0));
  for (std::size_t i = 0; i < divs.size(); ++i) {
    for (std::size_t j = i; j < divs.size(); ++j) {
      if (divs[j] % divs[i] != 0) continue;
      const int mu = mobius(divs[j] / divs[i]);
      if (mu > 0) {
        h[i] += g[j];
      } else if (mu < 0) {
        h[i] -= g[j];
      }
    }
  }
  return h;
}

}  // namespace monodyn::nt
