#include <gtest/gtest.h>

#include <map>

#include "monodyn/errors.hpp"
#include "monodyn/function_field.hpp"
#include "monodyn/numtheory.hpp"

namespace ffk = monodyn::ffield;
namespace nt = monodyn::nt;
using monodyn::BigInt;
using monodyn::Rational;
using nt::u64;

namespace {

const ffk::SeriesPoint& at(const ffk::FFDensityReport& rep, u64 t) { return rep.series.at(t - 1); }

}  // namespace

TEST(IrreducibleCount, SmallValues) {
  EXPECT_EQ(ffk::irreducible_count(2, 1), 2U);
  EXPECT_EQ(ffk::irreducible_count(2, 3), 2U);
  EXPECT_EQ(ffk::irreducible_count(3, 2), 3U);
  EXPECT_EQ(ffk::irreducible_count(4, 2), 6U);
}

TEST(IrreducibleCount, MatchesExhaustiveScans) {
  const std::map<u64, std::vector<u64>> expected{
      {2, {2, 1, 2, 3, 6, 9, 18, 30}},
      {3, {3, 3, 8, 18, 48, 116}},
      {5, {5, 10, 40, 150}},
  };
  for (const auto& [q, counts] : expected) {
    for (u64 d = 1; d <= counts.size(); ++d) {
      EXPECT_EQ(ffk::irreducible_count(q, d), counts[d - 1]) << q << " " << d;
    }
  }
}

TEST(IrreducibleCount, NecklaceIdentity) {
  for (u64 q : {2, 3, 4, 5, 7, 8, 9, 16, 25}) {
    for (u64 D = 1; D <= 20; ++D) {
      BigInt sum = 0;
      for (u64 d : nt::divisors(D)) sum += BigInt(d) * ffk::irreducible_count_exact(q, d);
      ASSERT_EQ(sum, boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(D))) << q << D;
    }
  }
}

TEST(IrreducibleCount, Errors) {
  EXPECT_THROW((void)ffk::irreducible_count(2, 63), std::out_of_range);
  EXPECT_EQ(ffk::irreducible_count_exact(2, 64),
            (boost::multiprecision::pow(BigInt(2), 64) - boost::multiprecision::pow(BigInt(2), 32)) /
                64);
  EXPECT_THROW((void)ffk::irreducible_count(6, 2), std::domain_error);
  EXPECT_THROW((void)ffk::irreducible_count(2, 0), std::domain_error);
}

TEST(PiK, SmallValues) {
  EXPECT_EQ(ffk::pi_K(2, 1), 2);
  EXPECT_EQ(ffk::pi_K(2, 3), 5);
  EXPECT_EQ(ffk::pi_K(3, 2), 6);
  EXPECT_EQ(ffk::pi_K(3, 0), 0);
}

TEST(CrCount, Values) {
  EXPECT_EQ(ffk::C_r_count(2, 3, 4).count, 4);
  EXPECT_EQ(ffk::C_r_count(3, 5, 4).count, 18);
  EXPECT_EQ(ffk::C_r_count(3, 5, 3).count, 0);
  const auto empty = ffk::C_r_count(2, 6, 10);
  EXPECT_TRUE(empty.empty_set);
  EXPECT_EQ(empty.count, 0);
}

TEST(CrCount, AllDegreesWhenRDividesQMinusOne) {
  for (u64 t = 1; t <= 60; ++t) {
    ASSERT_EQ(ffk::C_r_count(7, 3, t).count, ffk::pi_K(7, t));
    ASSERT_EQ(ffk::C_r_count(16, 5, t).count, ffk::pi_K(16, t));
  }
}

TEST(SubsequenceLimits, Values) {
  const auto a = ffk::subsequence_limits(2, 3);
  EXPECT_EQ(a.l_r, 2U);
  EXPECT_EQ(a.limit_A, Rational(2, 3));
  EXPECT_EQ(a.limit_B, Rational(1, 3));
  const auto b = ffk::subsequence_limits(3, 5);
  EXPECT_EQ(b.l_r, 4U);
  EXPECT_EQ(b.limit_A, Rational(27, 40));
  EXPECT_EQ(b.limit_B, Rational(1, 40));
  const auto c = ffk::subsequence_limits(7, 6);
  EXPECT_EQ(c.l_r, 1U);
  EXPECT_EQ(c.limit_A, 1);
  EXPECT_EQ(c.limit_B, 1);
  EXPECT_THROW((void)ffk::subsequence_limits(4, 6), std::domain_error);
}

TEST(Oscillation, FrozenRatios) {
  const auto a = ffk::oscillation_experiment(2, 3, 40);
  EXPECT_EQ(at(a, 39).ratio, Rational(BigInt(9830903899LL), BigInt(28978383317LL)));
  EXPECT_EQ(at(a, 40).ratio, Rational(BigInt(37318668373LL), BigInt(56466147791LL)));
  EXPECT_EQ(at(a, 39).tag, ffk::Subsequence::kB);
  EXPECT_EQ(at(a, 40).tag, ffk::Subsequence::kA);
  EXPECT_EQ(at(a, 40).pi_K, BigInt(56466147791LL));

  const auto b = ffk::oscillation_experiment(3, 5, 36);
  EXPECT_EQ(at(b, 35).ratio, Rational(BigInt(29367926316906LL), BigInt(1088372517819673LL)));
  EXPECT_EQ(at(b, 36).ratio, Rational(BigInt(2114015633387016LL), BigInt(3173020224889783LL)));
  EXPECT_EQ(at(b, 34).tag, ffk::Subsequence::kNone);
}

TEST(Oscillation, LongSeriesConvergesAlongSubsequences) {
  const auto a = ffk::oscillation_experiment(2, 3, 4096);
  EXPECT_NEAR(monodyn::to_double(at(a, 4095).ratio), 0.3333876177408148, 1e-12);
  EXPECT_NEAR(monodyn::to_double(at(a, 4096).ratio), 0.6666123955165355, 1e-12);
  EXPECT_LT(a.final_error_A, Rational(1, 10000));
  EXPECT_LT(a.final_error_B, Rational(1, 10000));
  EXPECT_TRUE(a.tail_monotone_A);
  EXPECT_TRUE(a.tail_monotone_B);
  EXPECT_GT(a.tail_spread, Rational(1, 5));

  const auto b = ffk::oscillation_experiment(3, 5, 4096);
  EXPECT_NEAR(monodyn::to_double(at(b, 4095).ratio), 0.0250155785524372, 1e-12);
  EXPECT_NEAR(monodyn::to_double(at(b, 4096).ratio), 0.6749258193409223, 1e-12);
  EXPECT_LT(b.final_error_A, Rational(1, 10000));
  EXPECT_LT(b.final_error_B, Rational(1, 10000));
  EXPECT_GT(b.tail_spread, Rational(1, 5));
}

TEST(Oscillation, SubsequenceErrorsDecrease) {
  const auto rep = ffk::oscillation_experiment(2, 3, 400);
  Rational prev_A = 1, prev_B = 1;
  for (const auto& pt : rep.series) {
    // The B errors rise between t = 9 and t = 15 while the ratio crosses its limit.
    if (pt.t < 16) continue;
    if (pt.tag == ffk::Subsequence::kA) {
      const auto e = monodyn::abs_diff(pt.ratio, rep.limit_A);
      ASSERT_LT(e, prev_A) << pt.t;
      prev_A = e;
    } else if (pt.tag == ffk::Subsequence::kB) {
      const auto e = monodyn::abs_diff(pt.ratio, rep.limit_B);
      ASSERT_LT(e, prev_B) << pt.t;
      prev_B = e;
    }
  }
}

TEST(Oscillation, SplitCaseIsExactlyOne) {
  const auto rep = ffk::oscillation_experiment(7, 3, 50);
  for (const auto& pt : rep.series) {
    ASSERT_EQ(pt.ratio, 1);
    ASSERT_EQ(pt.tag, ffk::Subsequence::kA);
  }
  EXPECT_EQ(rep.final_error_A, 0);
  EXPECT_EQ(rep.tail_spread, 0);
}

TEST(Oscillation, Errors) {
  EXPECT_THROW((void)ffk::oscillation_experiment(2, 3, 4097), monodyn::ResourceLimitError);
  EXPECT_THROW((void)ffk::oscillation_experiment(2, 3, 0), std::domain_error);
  EXPECT_THROW((void)ffk::oscillation_experiment(3, 6, 10), std::domain_error);
}

TEST(DirichletDensity, Values) {
  EXPECT_EQ(ffk::dirichlet_density_S(2, 3), Rational(1, 2));
  EXPECT_EQ(ffk::dirichlet_density_S(3, 5), Rational(1, 4));
  EXPECT_EQ(ffk::dirichlet_density_S(13, 4), 1);
  EXPECT_THROW((void)ffk::dirichlet_density_S(9, 6), std::domain_error);
}

TEST(DirichletMeanSolutions, Values) {
  EXPECT_EQ(ffk::dirichlet_mean_solutions(2, 3), 2);
  EXPECT_EQ(ffk::dirichlet_mean_solutions(3, 8), 5);
  EXPECT_EQ(ffk::dirichlet_mean_solutions(2, 16), 1);
  for (u64 q : {2, 3, 4, 5, 9}) {
    for (u64 m = 1; m <= 300; ++m) {
      const auto v = ffk::dirichlet_mean_solutions(q, m);
      ASSERT_GE(v, 1);
      ASSERT_EQ(v == 1, nt::coprime_part(m, q) == 1) << q << " " << m;
    }
  }
}

TEST(DirichletDK, Values) {
  for (u64 q : {2, 3, 4, 5, 7, 8, 9}) {
    EXPECT_EQ(ffk::dirichlet_D_K(q, 2, 1), 2) << q;
    EXPECT_EQ(ffk::dirichlet_C_K(q, 2, 1), 2) << q;
  }
  EXPECT_EQ(ffk::dirichlet_D_K(3, 2, 2), 0);
  EXPECT_EQ(ffk::dirichlet_C_K(3, 2, 2), 0);
  EXPECT_EQ(ffk::dirichlet_D_K(2, 3, 1), 2);
  EXPECT_THROW((void)ffk::dirichlet_D_K(2, 2, 64), std::out_of_range);
  for (u64 q : {2, 3, 5, 7}) {
    for (u64 n = 2; n <= 30; ++n) {
      const auto d = ffk::dirichlet_D_K(q, n, 1);
      ASSERT_GE(d, 1);
      if (nt::coprime_part(n - 1, q) == 1) {
        ASSERT_EQ(d, 2) << q << " " << n;
      }
    }
  }
}

TEST(DivergenceProbeK, FrozenPartialSums) {
  const std::vector<u64> expected{2,     2,     3,      4,      5,      5,      6,     11,
                                  53,    65,    90,     136,    145,    188,    413,   498,
                                  499,   758,   759,    3949,   8212,   8784,   8833,  17173,
                                  91825, 100016, 109214, 201852, 215719, 291968, 291971};
  const auto s = ffk::divergence_probe_K(3, 2, 31);
  ASSERT_EQ(s.periodic_sum.size(), 31U);
  for (u64 r = 1; r <= 31; ++r) EXPECT_EQ(s.periodic_sum[r - 1], expected[r - 1]) << r;
  EXPECT_EQ(s.cycle_sum.back(),
            Rational(BigInt("259021913502461093"), BigInt("24067258815600")));
}

TEST(FixedPointOscillation, DivergentMeans) {
  // x^4 over F_2(T): l = 3, l_3 = ord_3(2) = 2.
  const auto rep = ffk::fixed_point_oscillation(2, 4, 200);
  EXPECT_EQ(rep.density.l_r, 2U);
  EXPECT_EQ(rep.mean_limit_A, Rational(10, 3));
  EXPECT_EQ(rep.mean_limit_B, Rational(8, 3));
  EXPECT_NE(rep.mean_limit_A, rep.mean_limit_B);
  EXPECT_THROW((void)ffk::fixed_point_oscillation(7, 4, 10), std::domain_error);
  EXPECT_THROW((void)ffk::fixed_point_oscillation(2, 5, 10), std::domain_error);
  EXPECT_THROW((void)ffk::fixed_point_oscillation(3, 4, 10), std::domain_error);
}
