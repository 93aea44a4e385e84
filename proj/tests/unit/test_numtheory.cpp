#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "monodyn/errors.hpp"
#include "monodyn/exact.hpp"
#include "monodyn/numtheory.hpp"

namespace nt = monodyn::nt;
using nt::u64;

namespace {

u64 brute_phi(u64 m) {
  u64 c = 0;
  for (u64 k = 1; k <= m; ++k) c += std::gcd(k, m) == 1;
  return c;
}

int brute_mobius(u64 m) {
  int sign = 1;
  for (u64 p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

u64 brute_order(u64 a, u64 m) {
  u64 x = a % m;
  for (u64 k = 1;; ++k) {
    if (x == 1 % m) return k;
    x = x * a % m;
  }
}

}  // namespace

TEST(ModPow, SmallValues) {
  EXPECT_EQ(nt::mod_pow(2, 10, 1000), 24U);
  EXPECT_EQ(nt::mod_pow(3, 0, 7), 1U);
  EXPECT_EQ(nt::mod_pow(5, 3, 1), 0U);
  EXPECT_EQ(nt::mul_mod(u64{1} << 62, 4, (u64{1} << 63) - 25), 25U * 2);
}

TEST(ModPow, ZeroModulusThrows) { EXPECT_THROW((void)nt::mod_pow(2, 3, 0), std::domain_error); }

TEST(IsPrime, AgreesWithSieve) {
  const auto primes = nt::primes_up_to(100000);
  std::vector<bool> is(100001, false);
  for (u64 p : primes) is[p] = true;
  for (u64 n = 0; n <= 100000; ++n) ASSERT_EQ(nt::is_prime(n), is[n]) << n;
}

TEST(IsPrime, LargeAndPseudoprimes) {
  EXPECT_TRUE(nt::is_prime((u64{1} << 61) - 1));
  EXPECT_TRUE(nt::is_prime((u64{1} << 63) - 25));
  EXPECT_FALSE(nt::is_prime(561));
  EXPECT_FALSE(nt::is_prime(3215031751ULL));
  EXPECT_FALSE(nt::is_prime(3825123056546413051ULL));
  EXPECT_FALSE(nt::is_prime(2147483647ULL * 2147483629ULL));
}

TEST(Factorize, KnownValues) {
  const auto f = nt::factorize(600851475143ULL);
  ASSERT_EQ(f.factors.size(), 4U);
  EXPECT_EQ(f.factors[0].prime, 71U);
  EXPECT_EQ(f.factors[3].prime, 6857U);

  const auto g = nt::factorize(2147483647ULL * 2147483629ULL);
  ASSERT_EQ(g.factors.size(), 2U);
  EXPECT_EQ(g.factors[0].prime, 2147483629U);
  EXPECT_EQ(g.factors[1].prime, 2147483647U);

  const auto h = nt::factorize(u64{1} << 62);
  ASSERT_EQ(h.factors.size(), 1U);
  EXPECT_EQ(h.factors[0].exponent, 62U);
  EXPECT_EQ(nt::factorize(1).factors.size(), 0U);
}

TEST(Factorize, RandomProductsReconstruct) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<u64> dist(1, nt::kMaxInput);
  for (int i = 0; i < 300; ++i) {
    const u64 m = dist(rng);
    const auto f = nt::factorize(m);
    monodyn::BigInt product = 1;
    for (const auto& [p, e] : f.factors) {
      ASSERT_TRUE(nt::is_prime(p)) << m;
      for (unsigned k = 0; k < e; ++k) product *= p;
    }
    ASSERT_EQ(product, monodyn::BigInt(m));
  }
}

TEST(Factorize, RangeErrors) {
  EXPECT_THROW((void)nt::factorize(0), std::out_of_range);
  EXPECT_THROW((void)nt::factorize(u64{1} << 63), std::out_of_range);
}

TEST(PrimePower, Detection) {
  EXPECT_EQ(nt::prime_power(1024)->exponent, 10U);
  EXPECT_EQ(nt::prime_power(2187)->prime, 3U);
  EXPECT_FALSE(nt::prime_power(12));
  EXPECT_FALSE(nt::prime_power(1));
  EXPECT_FALSE(nt::prime_power(0));
}

TEST(Divisors, SortedAndComplete) {
  EXPECT_EQ(nt::divisors(12), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(nt::divisors(1), (std::vector<u64>{1}));
  for (u64 m = 1; m <= 2000; ++m) {
    std::vector<u64> brute;
    for (u64 d = 1; d <= m; ++d) {
      if (m % d == 0) brute.push_back(d);
    }
    ASSERT_EQ(nt::divisors(m), brute) << m;
    const auto facs = nt::divisor_factorizations(nt::factorize(m));
    ASSERT_EQ(facs.size(), brute.size());
    for (std::size_t i = 0; i < facs.size(); ++i) ASSERT_EQ(facs[i].value, brute[i]);
  }
}

TEST(Arithmetic, PhiMobiusTauAgainstBruteForce) {
  for (u64 m = 1; m <= 3000; ++m) {
    ASSERT_EQ(nt::euler_phi(m), brute_phi(m)) << m;
    ASSERT_EQ(nt::mobius(m), brute_mobius(m)) << m;
    ASSERT_EQ(nt::tau(m), nt::divisors(m).size()) << m;
  }
}

TEST(MultiplicativeOrder, AgainstBruteForce) {
  for (u64 m = 1; m <= 300; ++m) {
    for (u64 a = 1; a < m + 1; ++a) {
      if (std::gcd(a, m) != 1) continue;
      ASSERT_EQ(nt::multiplicative_order(a, m), brute_order(a, m)) << a << " mod " << m;
    }
  }
  EXPECT_EQ(nt::multiplicative_order(2, (u64{1} << 61) - 1), 61U);
}

TEST(MultiplicativeOrder, NonUnitThrows) {
  EXPECT_THROW((void)nt::multiplicative_order(4, 6), std::domain_error);
}

TEST(VS, FrozenValues) {
  EXPECT_EQ(nt::v_s(2, 8), 4U);
  EXPECT_EQ(nt::v_s(2, 12), 4U);
  EXPECT_EQ(nt::v_s(1, 12), 1U);
  EXPECT_EQ(nt::v_s(3, 1), 1U);
  EXPECT_THROW((void)nt::v_s(0, 5), std::domain_error);
}

TEST(VS, BruteForceUpTo5000) {
  constexpr u64 kL = 5000;
  constexpr u64 kS = 12;
  for (u64 l = 1; l <= kL; ++l) {
    std::vector<u64> count(kS + 1, 0);
    for (u64 x = 0; x < l; ++x) {
      u64 pw = 1 % l;
      for (u64 s = 1; s <= kS; ++s) {
        pw = pw * x % l;
        count[s] += pw == 1 % l;
      }
    }
    for (u64 s = 1; s <= kS; ++s) ASSERT_EQ(nt::v_s(s, l), count[s]) << "s=" << s << " l=" << l;
  }
}

TEST(CoprimePart, Values) {
  EXPECT_EQ(nt::coprime_part(12, 2), 3U);
  EXPECT_EQ(nt::coprime_part(2, 2), 1U);
  EXPECT_EQ(nt::coprime_part(3, 3), 1U);
  EXPECT_EQ(nt::coprime_part(360, 6), 5U);
  EXPECT_EQ(nt::coprime_part(35, 4), 35U);
  EXPECT_THROW((void)nt::coprime_part(0, 2), std::domain_error);
}

TEST(Sieve, CountsAndErrors) {
  EXPECT_EQ(nt::primes_up_to(2), (std::vector<u64>{2}));
  EXPECT_EQ(nt::primes_up_to(30).size(), 10U);
  EXPECT_EQ(nt::primes_up_to(1000000).size(), 78498U);
  EXPECT_THROW((void)nt::primes_up_to(1), std::domain_error);
  EXPECT_THROW((void)nt::primes_up_to(nt::kMaxSieve + 1), monodyn::ResourceLimitError);
}

TEST(Sieve, WilsonTheorem) {
  for (u64 p : nt::primes_up_to(2000)) {
    u64 f = 1;
    for (u64 k = 2; k < p; ++k) f = f * k % p;
    ASSERT_EQ(f, p - 1) << p;
  }
}

TEST(CheckedPow, Overflow) {
  EXPECT_EQ(nt::checked_pow(2, 62), u64{1} << 62);
  EXPECT_FALSE(nt::checked_pow(2, 63));
  EXPECT_EQ(nt::checked_pow(1, 1000000), 1U);
  EXPECT_EQ(nt::checked_pow(7, 0), 1U);
}

TEST(InvertOverMultiples, RecoversRandomFunctions) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> val(-50, 50);
  for (u64 m = 1; m <= 500; ++m) {
    const auto divs = nt::divisors(m);
    std::vector<long long> h(divs.size());
    for (auto& x : h) x = val(rng);
    std::vector<long long> g(divs.size(), 0);
    for (std::size_t i = 0; i < divs.size(); ++i) {
      for (std::size_t j = 0; j < divs.size(); ++j) {
        if (divs[j] % divs[i] == 0) g[i] += h[j];
      }
    }
    ASSERT_EQ(nt::invert_over_multiples<long long>(divs, g), h) << m;
  }
}
