#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "tailbound/quadrature.hpp"

using namespace tailbound;

TEST(Quadrature, Examples) {
  EXPECT_NEAR(integrate([](double) { return 1.0; }, 0.0, 1.0), 1.0, 1e-14);
  EXPECT_NEAR(integrate([](double x) { return 6.0 * x * (1.0 - x); }, 0.0, 1.0), 1.0, 1e-14);
  EXPECT_NEAR(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0), 2.0, 1e-12);
}

TEST(Quadrature, ShiftedIntervalAndLogSingularity) {
  EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, -1.0, 2.0), std::exp(2.0) - std::exp(-1.0), 1e-12);
  EXPECT_NEAR(integrate([](double x) { return std::log(x); }, 0.0, 1.0), -1.0, 1e-12);
}

TEST(Quadrature, Deterministic) {
  auto f = [](double x) { return std::pow(x, -0.3) * std::pow(1.0 - x, 0.7); };
  const QuadratureResult a = integrate_detailed(f, 0.0, 1.0);
  const QuadratureResult b = integrate_detailed(f, 0.0, 1.0);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.levels, b.levels);
  EXPECT_LE(a.error, 1e-12 * (1.0 + std::fabs(a.value)));
}

TEST(Quadrature, Errors) {
  EXPECT_THROW(integrate([](double) { return 1.0; }, 1.0, 0.0), std::domain_error);
  EXPECT_THROW(integrate([](double) { return NAN; }, 0.0, 1.0), std::domain_error);
  try {
    integrate([](double x) { return std::cos(1e5 * x); }, 0.0, 1.0, 1e-15);
    FAIL() << "expected AccuracyError";
  } catch (const AccuracyError& e) {
    EXPECT_TRUE(std::isfinite(e.best_estimate()));
    EXPECT_GT(e.error_estimate(), 0.0);
  }
}
