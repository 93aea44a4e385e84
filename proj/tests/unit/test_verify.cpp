#include <gtest/gtest.h>

#include "monodyn/verify.hpp"

namespace verify = monodyn::verify;
using std::uint64_t;

TEST(PrimePowers, SmallBound) {
  EXPECT_EQ(verify::prime_powers_up_to(30),
            (std::vector<uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29}));
  EXPECT_TRUE(verify::prime_powers_up_to(1).empty());
  EXPECT_EQ(verify::prime_powers_up_to(3000).size(), 466U);
}

TEST(Run, QuickScopePasses) {
  verify::Options opts;
  opts.seed = 5;
  const auto rep = verify::run(opts);
  EXPECT_TRUE(rep.passed());
  ASSERT_EQ(rep.checks.size(), 6U);
  for (const auto& c : rep.checks) {
    EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    EXPECT_GT(c.cases, 0U) << c.name;
  }
}

TEST(Run, InjectedFaultIsCaught) {
  verify::Options opts;
  opts.inject_fault = true;
  const auto rep = verify::run(opts);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.checks.front().passed);
  EXPECT_EQ(rep.checks.front().detail, "q=2 n=2: profile differs from brute force");
}
