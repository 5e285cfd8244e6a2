#include <gtest/gtest.h>

#include <stdexcept>

#include "tailbound/exact.hpp"

using namespace tailbound;

namespace {

BinomialSpec spec(std::int64_t n, const char* mu) { return BinomialSpec(n, BigRational::parse(mu)); }

BigRational sum(const std::vector<BigRational>& v) {
  BigRational s;
  for (const auto& x : v) s += x;
  return s;
}

}  // namespace

TEST(BinomialSpec, Validation) {
  EXPECT_THROW(BinomialSpec(0, BigRational(0)), std::domain_error);
  EXPECT_THROW(spec(3, "4"), std::domain_error);
  EXPECT_THROW(spec(3, "-1/2"), std::domain_error);
  EXPECT_EQ(spec(5, "5/2").p(), BigRational(1, 2));
}

TEST(BinomPmf, Examples) {
  EXPECT_EQ(binom_pmf(spec(2, "1"), 2), BigRational(1, 4));
  EXPECT_EQ(binom_pmf(spec(3, "2"), 3), BigRational(8, 27));
  EXPECT_EQ(binom_pmf(spec(5, "2"), 0), BigRational(243, 3125));
  EXPECT_THROW(binom_pmf(spec(5, "2"), 6), std::domain_error);
  EXPECT_THROW(binom_pmf(spec(5, "2"), -1), std::domain_error);
}

TEST(BinomPmf, DegenerateEndpoints) {
  EXPECT_EQ(binom_pmf(spec(4, "0"), 0), BigRational(1));
  EXPECT_EQ(binom_pmf(spec(4, "4"), 4), BigRational(1));
  EXPECT_EQ(binom_upper_tail(spec(4, "0"), 1), BigRational(0));
}

TEST(BinomPmf, NormalizationOnGrid) {
  for (std::int64_t n = 1; n <= 60; n += 7) {
    for (BigRational mu; mu <= BigRational(n); mu += BigRational(n, 7)) {
      EXPECT_EQ(sum(binom_pmf_all(BinomialSpec(n, mu))), BigRational(1)) << n << " " << mu;
    }
  }
}

TEST(BinomUpperTail, Examples) {
  EXPECT_EQ(binom_upper_tail(spec(5, "2.5"), 3), BigRational(1, 2));
  EXPECT_EQ(binom_upper_tail(spec(5, "2"), 2), BigRational(2072, 3125));
  EXPECT_EQ(binom_upper_tail(spec(2, "1"), 1), BigRational(3, 4));
  EXPECT_EQ(binom_upper_tail(spec(3, "2"), 2), BigRational(20, 27));
}

TEST(BinomUpperTail, Clamping) {
  EXPECT_EQ(binom_upper_tail(spec(5, "2"), 0), BigRational(1));
  EXPECT_EQ(binom_upper_tail(spec(5, "2"), -3), BigRational(1));
  EXPECT_EQ(binom_upper_tail(spec(5, "2"), 6), BigRational(0));
  EXPECT_EQ(binom_lower_tail(spec(5, "2"), -1), BigRational(0));
  EXPECT_EQ(binom_lower_tail(spec(5, "2"), 5), BigRational(1));
}

TEST(BinomUpperTail, TailsVectorMatchesSingleCalls) {
  const auto s = spec(9, "7/3");
  const auto tails = binom_upper_tails(s);
  ASSERT_EQ(tails.size(), 11u);
  for (std::int64_t k = 0; k <= 10; ++k) EXPECT_EQ(tails[static_cast<std::size_t>(k)], binom_upper_tail(s, k));
}

TEST(BinomUpperTail, Symmetry) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (BigRational mu; mu <= BigRational(n); mu += BigRational(1, 3)) {
      for (std::int64_t k = 0; k <= n; ++k) {
        EXPECT_EQ(binom_upper_tail(BinomialSpec(n, mu), k), binom_lower_tail(BinomialSpec(n, BigRational(n) - mu), n - k));
      }
    }
  }
}

TEST(BinomUpperTail, StochasticallyIncreasingInMu) {
  const std::int64_t n = 10;
  for (BigRational mu = BigRational(1, 4); mu <= BigRational(n); mu += BigRational(1, 4)) {
    const BigRational lower = mu - BigRational(1, 4);
    for (std::int64_t k = 0; k <= n; ++k) {
      EXPECT_LE(binom_upper_tail(BinomialSpec(n, lower), k), binom_upper_tail(BinomialSpec(n, mu), k));
    }
  }
}

TEST(PoissonBinomial, Examples) {
  const auto pmf = [](std::vector<BigRational> v) { return poisson_binomial_pmf(IndicatorVector(std::move(v))); };
  EXPECT_EQ(pmf({BigRational(1), BigRational(1, 2)}),
            (std::vector<BigRational>{BigRational(0), BigRational(1, 2), BigRational(1, 2)}));
  EXPECT_EQ(pmf({BigRational(1, 2), BigRational(1, 2)}),
            (std::vector<BigRational>{BigRational(1, 4), BigRational(1, 2), BigRational(1, 4)}));
  EXPECT_EQ(pmf({BigRational(1), BigRational(1, 2), BigRational(1, 2)}),
            (std::vector<BigRational>{BigRational(0), BigRational(1, 4), BigRational(1, 2), BigRational(1, 4)}));
}

TEST(PoissonBinomial, Intervals) {
  const IndicatorVector halves({BigRational(1, 2), BigRational(1, 2)});
  EXPECT_EQ(poisson_binomial_interval(halves, 0, 2), BigRational(1));
  const IndicatorVector v({BigRational(1), BigRational(1, 2), BigRational(1, 2)});
  EXPECT_EQ(poisson_binomial_interval(v, 2, 3), BigRational(3, 4));
  EXPECT_EQ(poisson_binomial_interval(v, 1, 2), BigRational(3, 4));
  EXPECT_EQ(interval_mass(binom_pmf_all(spec(3, "2")), 1, 2), BigRational(18, 27));
  const IndicatorVector thirds({BigRational(2, 3), BigRational(2, 3), BigRational(2, 3)});
  EXPECT_EQ(poisson_binomial_interval(thirds, 2, 3), BigRational(20, 27));
  EXPECT_EQ(poisson_binomial_interval(thirds, 5, 9), BigRational(0));
  EXPECT_EQ(poisson_binomial_interval(thirds, -4, -1), BigRational(0));
}

TEST(PoissonBinomial, Validation) {
  EXPECT_THROW(IndicatorVector({BigRational(3, 2)}), std::domain_error);
  EXPECT_THROW(IndicatorVector({BigRational(-1, 2)}), std::domain_error);
}

TEST(PoissonBinomial, ConstantVectorEqualsBinomial) {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (const BigRational p : {BigRational(1, 3), BigRational(5, 7), BigRational(1, 2)}) {
      const auto pb = poisson_binomial_pmf(IndicatorVector::constant(n, p));
      EXPECT_EQ(pb, binom_pmf_all(BinomialSpec(n, p * BigRational(n))));
    }
  }
}
