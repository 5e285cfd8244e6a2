#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "tailbound/bounds.hpp"
#include "tailbound/exact.hpp"
#include "tailbound/special.hpp"

using namespace tailbound;

namespace {

ShiftQuery q(const char* mu, std::int64_t l, std::optional<std::int64_t> n = std::nullopt) {
  return ShiftQuery(BigRational::parse(mu), l, n);
}

}  // namespace

TEST(SharpLower, Examples) {
  EXPECT_EQ(binom_sharp_lower(1, 1).exact, BigRational(1, 4));
  EXPECT_EQ(binom_sharp_lower(2, 1).exact, BigRational(8, 27));
  EXPECT_EQ(binom_sharp_lower(3, 2).exact, BigRational(243, 3125));
  EXPECT_EQ(binom_sharp_lower(3, 2).kind, BoundKind::lower);
  EXPECT_TRUE(binom_sharp_lower(3, 2).attained_at.has_value());
  EXPECT_THROW(binom_sharp_lower(0, 1), std::domain_error);
}

TEST(SharpLower, AttainedAtNEqualsMuPlusL) {
  for (std::int64_t mu = 1; mu <= 6; ++mu) {
    for (std::int64_t l = 1; l <= 4; ++l) {
      const BigRational exact = binom_upper_tail(BinomialSpec(mu + l, BigRational(mu)), mu + l);
      EXPECT_EQ(*binom_sharp_lower(mu, l).exact, exact);
    }
  }
}

TEST(UniversalLower, Examples) {
  EXPECT_EQ(binom_universal_lower(1).exact, BigRational(1, 4));
  EXPECT_EQ(binom_universal_lower(2).exact, BigRational(1, 27));
  EXPECT_EQ(binom_universal_lower(3).exact, BigRational(1, 256));
}

TEST(CorollaryLower, Examples) {
  const BoundResult a = binom_corollary_lower(q("1", 0));
  EXPECT_EQ(a.exact, BigRational(1, 4));
  EXPECT_EQ(a.universal_floor, BigRational(1, 4));
  EXPECT_EQ(binom_corollary_lower(q("2.5", 0)).exact, BigRational(8, 27));
  const BoundResult c = binom_corollary_lower(q("1", 1));
  EXPECT_EQ(c.exact, BigRational(1, 27));
  EXPECT_EQ(c.universal_floor, BigRational(1, 27));
  EXPECT_FALSE(binom_corollary_lower(q("0.5", 0)).valid);
  EXPECT_FALSE(binom_corollary_lower(q("3", 2, 4)).valid);
}

TEST(CorollaryLower, HoldsOnSmallGrid) {
  for (std::int64_t n = 2; n <= 15; ++n) {
    for (BigRational mu(1); mu <= BigRational(n); mu += BigRational(1, 4)) {
      for (std::int64_t l = 0; l <= 2; ++l) {
        const BoundResult b = binom_corollary_lower(ShiftQuery(mu, l, n));
        if (!b.valid) continue;
        EXPECT_GE(exact_shift_upper_tail(n, mu, l), *b.exact) << n << " " << mu << " " << l;
      }
    }
  }
}

TEST(LowerTailBound, Examples) {
  EXPECT_EQ(binom_lower_tail_bound(q("4", 0, 5)).exact, BigRational(1, 4));
  EXPECT_EQ(binom_lower_tail_bound(q("2", 2, 4)).exact, BigRational(32, 3125));
  // mu is rounded up: ceil(2.5) = 3 in n = 5 trials at l = 1.
  EXPECT_EQ(binom_lower_tail_bound(q("2.5", 1, 5)).exact, BigRational(1, 16));
  EXPECT_GE(exact_shift_lower_tail(5, BigRational(5, 2), 1), BigRational(1, 16));
  EXPECT_FALSE(binom_lower_tail_bound(q("1", 2, 5)).valid);
  EXPECT_THROW(binom_lower_tail_bound(q("2", 0)), std::domain_error);
}

TEST(HalfUpper, Constant) {
  const BoundResult h = binom_half_upper();
  EXPECT_EQ(h.exact, BigRational(1, 2));
  EXPECT_EQ(h.kind, BoundKind::upper);
}

TEST(PoissonSharp, Examples) {
  EXPECT_NEAR(poisson_sharp_lower(0).value, 0.632121, 1e-6);
  EXPECT_NEAR(poisson_sharp_lower(1).value, 0.264241, 1e-6);
  EXPECT_NEAR(poisson_sharp_lower(2).value, 0.080301, 1e-6);
  for (std::int64_t l = 0; l <= 6; ++l) {
    EXPECT_NEAR(poisson_sharp_lower(l).value, poisson_upper_tail(PoissonSpec(1.0), 1 + l), 1e-15);
  }
}

TEST(PoissonLowerTail, ExpMinusL) {
  for (std::int64_t l = 1; l <= 5; ++l) EXPECT_DOUBLE_EQ(poisson_lower_tail_bound(l).value, std::exp(-double(l)));
  for (std::int64_t lambda = 2; lambda <= 30; ++lambda) {
    for (std::int64_t l = 1; l < lambda; ++l) {
      EXPECT_GE(poisson_lower_tail(PoissonSpec(double(lambda)), lambda - l), std::exp(-double(l)));
    }
  }
}

TEST(BetaSandwich, EnclosesExact) {
  for (std::int64_t n = 3; n <= 20; ++n) {
    for (BigRational mu(1, 3); mu + BigRational(1) < BigRational(n); mu += BigRational(1, 3)) {
      const BetaSandwich s = beta_interpolation(ShiftQuery(mu, 1, n));
      const double exact = exact_shift_upper_tail(n, mu, 1).to_double();
      EXPECT_LE(s.lower, exact + 1e-12);
      EXPECT_LE(exact, s.upper + 1e-12);
      if (mu.is_integer()) EXPECT_NEAR(s.upper, exact, 1e-12);
    }
  }
}

TEST(UniformBeta, Validity) {
  EXPECT_FALSE(uniform_beta_lower(q("2", 2, 4)).valid);
  EXPECT_FALSE(uniform_beta_lower(q("3", 1, 4)).valid);
  const BoundResult b = uniform_beta_lower(q("2", 1, 10));
  ASSERT_TRUE(b.valid);
  EXPECT_LE(b.value, exact_shift_upper_tail(10, BigRational(2), 1).to_double());
}

TEST(SmallMuThreshold, Value) {
  EXPECT_NEAR(small_mu_threshold(), 0.28768207245178092744, 1e-15);
  EXPECT_GE(exact_shift_upper_tail(10, BigRational::parse("0.29"), 0), BigRational(1, 4));
  EXPECT_LT(exact_shift_upper_tail(10, BigRational::parse("0.2"), 0), BigRational(1, 4));
}

TEST(ExactShift, CeilAndFloor) {
  EXPECT_EQ(exact_shift_upper_tail(5, BigRational(2), 0), BigRational(2072, 3125));
  EXPECT_EQ(exact_shift_upper_tail(5, BigRational(5, 2), 0), BigRational(1, 2));
  EXPECT_EQ(exact_shift_lower_tail(5, BigRational(5, 2), 0), BigRational(1, 2));
}
