#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "tailbound/reflection.hpp"

using namespace tailbound;

TEST(Reflection, ReferenceValue) {
  // mpmath findroot on p log r + (1-p) log(1-r) = p log x + (1-p) log(1-x).
  EXPECT_NEAR(reflect(ReflectionMap(0.3), 0.1), 0.5745962486843224885, 1e-13);
}

TEST(Reflection, FixedPointAndEndpoints) {
  for (double p : {0.1, 0.3, 0.5, 0.77}) {
    const ReflectionMap m(p);
    EXPECT_NEAR(reflect(m, p), p, 1e-15);
    EXPECT_EQ(reflect(m, 0.0), 1.0);
    EXPECT_EQ(reflect(m, 1.0), 0.0);
    EXPECT_EQ(reflect_derivative(m, p), -1.0);
    EXPECT_THROW(reflect_second_derivative(m, p), std::domain_error);
  }
}

TEST(Reflection, HalfIsMirror) {
  const ReflectionMap m(0.5);
  for (int i = 1; i < 100; ++i) EXPECT_NEAR(reflect(m, i / 100.0), 1.0 - i / 100.0, 1e-14);
}

TEST(Reflection, Involution) {
  for (double p : {0.05, 0.3, 0.62}) {
    const ReflectionMap m(p);
    for (int i = 1; i < 200; ++i) {
      const double x = i / 200.0;
      EXPECT_NEAR(reflect(m, reflect(m, x)), x, 1e-10) << p << " " << x;
    }
  }
}

TEST(Reflection, PreservesFp) {
  const ReflectionMap m(0.3);
  for (int i = 1; i < 50; ++i) {
    const Point01 x = Point01::from_value(i / 50.0);
    EXPECT_NEAR(log_fp(0.3, reflect(m, x).point()), log_fp(0.3, x), 1e-13);
  }
}

TEST(Reflection, DerivativeMatchesDifference) {
  const ReflectionMap m(0.3);
  const double x = 0.1;
  const double h = 1e-5;
  const double fd = (reflect(m, x + h) - reflect(m, x - h)) / (2 * h);
  EXPECT_NEAR(reflect_derivative(m, x), fd, 1e-7);
  EXPECT_LT(reflect_derivative(m, x), 0.0);
  EXPECT_GT(reflect_second_derivative(m, x), 0.0);
}

TEST(Reflection, Validation) {
  EXPECT_THROW(ReflectionMap(0.0), std::domain_error);
  EXPECT_THROW(ReflectionMap(1.0), std::domain_error);
  EXPECT_THROW(reflect(ReflectionMap(0.3), 1.5), std::domain_error);
}

TEST(DensityRatio, ConstantWeightIsOne) {
  const ReflectionMap m(0.4);
  const WeightFunction w(0.0, 0.0);
  for (double x : {0.1, 0.3, 0.7}) EXPECT_NEAR(density_ratio(m, w, x), 1.0, 1e-15);
}

TEST(DensityRatio, PowerOfFpIsOne) {
  // g = f_p^2 is invariant under r_p.
  const ReflectionMap m(0.3);
  const WeightFunction w(0.6, 1.4);
  for (double x : {0.05, 0.2, 0.5, 0.9}) EXPECT_NEAR(density_ratio(m, w, x), 1.0, 1e-12);
}

TEST(Odds, Identity) {
  const ReflectionMap m(0.3);
  const WeightFunction w(2.0, 1.0);
  const OddsPair o = odds_functional(m, w, 1.0);
  EXPECT_NEAR(o.lhs, o.rhs, 1e-8 * (1 + std::fabs(o.lhs)));
  const OddsPair mo = odds_functional_mirrored(m, w, 1.0);
  EXPECT_NEAR(mo.lhs, mo.rhs, 1e-8 * (1 + std::fabs(mo.lhs)));
}
