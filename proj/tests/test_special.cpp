#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tailbound/exact.hpp"
#include "tailbound/quadrature.hpp"
#include "tailbound/special.hpp"

using namespace tailbound;

namespace {

// Relative closeness.
::testing::AssertionResult near_rel(double got, double want, double tol) {
  const double err = std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
  if (err <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << got << " want " << want << " rel err " << err;
}

double ibeta(double a, double b, double x) { return regularized_incomplete_beta(BetaParams(a, b), x); }
double ibetac(double a, double b, double x) { return incomplete_beta_complement(BetaParams(a, b), x); }

}  // namespace

TEST(LogGamma, ClosedForms) {
  EXPECT_EQ(log_gamma(1.0), 0.0);
  EXPECT_EQ(log_gamma(2.0), 0.0);
  EXPECT_TRUE(near_rel(log_gamma(5.0), std::log(24.0), 1e-15));
  EXPECT_TRUE(near_rel(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-15));
}

// Reference values from mpmath.loggamma at 40 digits.
TEST(LogGamma, ReferenceValues) {
  EXPECT_TRUE(near_rel(log_gamma(0.001), 6.9071788853838536825, 1e-14));
  EXPECT_TRUE(near_rel(log_gamma(0.3), 1.0957979948180755217, 1e-14));
  EXPECT_TRUE(near_rel(log_gamma(2.5), 0.28468287047291915963, 1e-14));
  EXPECT_TRUE(near_rel(log_gamma(10.5), 13.940625219403763633, 1e-14));
  EXPECT_TRUE(near_rel(log_gamma(123.4), 469.33609744219055844, 1e-14));
  EXPECT_TRUE(near_rel(log_gamma(1e5), 1051287.7089736568949, 1e-14));
}

TEST(LogGamma, Domain) {
  EXPECT_THROW(log_gamma(0.0), std::domain_error);
  EXPECT_THROW(log_gamma(-1.5), std::domain_error);
  EXPECT_THROW(log_gamma(std::nan("")), std::domain_error);
}

TEST(LogBeta, MatchesLogGamma) {
  for (double a : {0.5, 2.0, 13.0, 250.0}) {
    for (double b : {0.3, 1.0, 40.0}) {
      EXPECT_TRUE(near_rel(log_beta(a, b), log_gamma(a) + log_gamma(b) - log_gamma(a + b), 1e-12)) << a << " " << b;
    }
  }
}

TEST(BetaParams, Validation) {
  EXPECT_THROW(BetaParams(0.0, 1.0), std::domain_error);
  EXPECT_THROW(BetaParams(1.0, -2.0), std::domain_error);
  EXPECT_THROW(BetaParams(INFINITY, 1.0), std::domain_error);
}

TEST(IncompleteBeta, Examples) {
  EXPECT_TRUE(near_rel(ibeta(1, 1, 0.3), 0.3, 1e-15));
  EXPECT_TRUE(near_rel(ibeta(1, 2, 0.5), 0.75, 1e-15));
  EXPECT_EQ(ibeta(2, 3, 0.0), 0.0);
  EXPECT_EQ(ibeta(2, 3, 1.0), 1.0);
  EXPECT_THROW(ibeta(2, 3, 1.5), std::domain_error);
  EXPECT_THROW(ibeta(2, 3, -0.1), std::domain_error);
}

// Reference values from mpmath.betainc at 40 digits (hyp2f1 form for the
// large shapes).
TEST(IncompleteBeta, ReferenceValues) {
  EXPECT_TRUE(near_rel(ibeta(0.5, 0.5, 0.2), 0.29516723530086654835, 1e-13));
  EXPECT_TRUE(near_rel(ibetac(0.5, 0.5, 0.2), 0.70483276469913345165, 1e-13));
  EXPECT_TRUE(near_rel(ibeta(2.5, 3.5, 0.4), 0.48690419152611735525, 1e-13));
  EXPECT_TRUE(near_rel(ibeta(30, 70, 0.25), 0.13581490428342743891, 1e-13));
  EXPECT_TRUE(near_rel(ibetac(30, 70, 0.25), 0.86418509571657256109, 1e-13));
  EXPECT_TRUE(near_rel(ibeta(0.1, 5, 0.01), 0.76908892078434628503, 1e-13));
  EXPECT_TRUE(near_rel(ibetac(0.1, 5, 0.01), 0.23091107921565371497, 1e-13));
  EXPECT_TRUE(near_rel(ibeta(1.4, 0.6, 0.4), 0.16759232337780646059, 1e-13));
  EXPECT_TRUE(near_rel(ibeta(1.2, 0.8, 0.2), 0.11569903668658915263, 1e-13));
  EXPECT_TRUE(near_rel(ibeta(3000, 7000, 0.3), 0.5011607691362499594, 1e-13));
  EXPECT_TRUE(near_rel(ibeta(3000, 7000, 0.29), 0.014136148980603676003, 1e-13));
}

TEST(IncompleteBeta, BinomialBridge) {
  EXPECT_NEAR(ibeta(1, 2, 0.5), binom_upper_tail(BinomialSpec(2, BigRational(1)), 1).to_double(), 1e-15);
  for (std::int64_t n = 1; n <= 30; n += 3) {
    const BigRational mu(n, 3);
    const BinomialSpec s(n, mu);
    for (std::int64_t k = 1; k <= n; ++k) {
      EXPECT_NEAR(ibeta(static_cast<double>(k), static_cast<double>(n - k + 1), s.p().to_double()),
                  binom_upper_tail(s, k).to_double(), 1e-12);
    }
  }
}

TEST(IncompleteBeta, ComplementSymmetry) {
  const double shapes[] = {0.5, 1, 2, 5, 20};
  for (double a : shapes) {
    for (double b : shapes) {
      for (int i = 1; i < 100; ++i) {
        const double x = i / 100.0;
        EXPECT_NEAR(ibeta(a, b, x) + ibeta(b, a, 1.0 - x), 1.0, 1e-13) << a << " " << b << " " << x;
      }
    }
  }
}

TEST(IncompleteBeta, MonotoneInShapesAndX) {
  for (int i = 1; i < 20; ++i) {
    const double x = i / 20.0;
    for (double a = 0.5; a < 10; a += 0.5) {
      EXPECT_GE(ibeta(a, 3, x), ibeta(a + 0.5, 3, x));
      EXPECT_LE(ibeta(3, a, x), ibeta(3, a + 0.5, x));
    }
    EXPECT_LE(ibeta(2.5, 4.5, x - 0.025), ibeta(2.5, 4.5, x));
  }
}

TEST(BetaDensity, Examples) {
  EXPECT_DOUBLE_EQ(beta_density(BetaParams(1, 1), 0.7), 1.0);
  EXPECT_DOUBLE_EQ(beta_density(BetaParams(2, 2), 0.5), 1.5);
  EXPECT_DOUBLE_EQ(beta_density(BetaParams(2, 1), 0.25), 0.5);
  EXPECT_TRUE(near_rel(beta_density(BetaParams(0.3, 0.7), 0.4), 0.57005978259476999669, 1e-13));
  EXPECT_TRUE(std::isinf(beta_density(BetaParams(0.5, 2), 0.0)));
  EXPECT_EQ(beta_density(BetaParams(3, 2), 0.0), 0.0);
}

TEST(BetaDensity, IntegratesToOne) {
  for (const auto& [a, b] : {std::pair{2.0, 2.0}, std::pair{0.5, 0.5}, std::pair{0.3, 0.7}, std::pair{7.0, 1.5}}) {
    // Upper half as the mirrored law on (0, 1/2), so 1 - x never rounds.
    const BetaParams params(a, b);
    const BetaParams mirrored(b, a);
    const double lower = integrate([&](double x) { return beta_density(params, x); }, 0.0, 0.5);
    const double upper = integrate([&](double t) { return beta_density(mirrored, t); }, 0.0, 0.5);
    EXPECT_NEAR(lower + upper, 1.0, 1e-12) << a << " " << b;
    EXPECT_NEAR(lower, regularized_incomplete_beta(params, 0.5), 1e-12) << a << " " << b;
  }
}

TEST(Poisson, Examples) {
  const PoissonSpec one(1.0);
  EXPECT_EQ(poisson_upper_tail(one, 0), 1.0);
  EXPECT_NEAR(poisson_upper_tail(one, 1), 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(poisson_upper_tail(one, 2), 1.0 - 2.0 * std::exp(-1.0), 1e-15);
  EXPECT_THROW(PoissonSpec(0.0), std::domain_error);
  EXPECT_THROW(PoissonSpec(-2.0), std::domain_error);
}

// Reference values from mpmath sums at 40 digits.
TEST(Poisson, ReferenceValues) {
  EXPECT_NEAR(poisson_upper_tail(PoissonSpec(10), 15), 0.083458472934662824911, 1e-15);
  EXPECT_NEAR(poisson_upper_tail(PoissonSpec(40), 50), 0.070335066659394954437, 1e-15);
  EXPECT_NEAR(poisson_upper_tail(PoissonSpec(3.5), 1), 0.96980261657768149926, 1e-15);
  EXPECT_NEAR(poisson_upper_tail(PoissonSpec(40), 41), 0.45808182163746296015, 1e-15);
  EXPECT_NEAR(poisson_upper_tail(PoissonSpec(2), 2), 0.59399415029016192432, 1e-15);
  EXPECT_NEAR(poisson_lower_tail(PoissonSpec(40), 30), 0.06169415311246963867, 1e-15);
  EXPECT_NEAR(poisson_lower_tail(PoissonSpec(10), 3), 0.010336050675925717866, 1e-15);
  EXPECT_NEAR(poisson_lower_tail(PoissonSpec(1), 0), 0.3678794411714423216, 1e-15);
}

TEST(Poisson, TailsAndPmfConsistent) {
  for (double lambda : {0.5, 1.0, 7.0, 33.3, 100.0}) {
    const PoissonSpec s(lambda);
    double total = 0.0;
    double prev = 1.0;
    for (std::int64_t k = 0; k <= 400; ++k) {
      total += poisson_pmf(s, k);
      const double tail = poisson_upper_tail(s, k);
      EXPECT_LE(tail, prev);
      prev = tail;
      EXPECT_NEAR(tail + poisson_lower_tail(s, k - 1), 1.0, 1e-14);
    }
    EXPECT_NEAR(total, 1.0, 1e-14) << lambda;
  }
}
