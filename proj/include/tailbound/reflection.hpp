#pragma once

// The reflection r_p: for x in [0,1], r_p(x) is the point on the other side
// of p with x^p (1-x)^(1-p) unchanged. It is a decreasing involution with
// fixed point p.

#include <array>

namespace tailbound {

/// A point of [0,1] stored with its complement, so values close to 1 keep
/// their distance to 1.
struct Point01 {
  double value;
  double complement;

  static Point01 from_value(double x) { return {x, 1.0 - x}; }
  static Point01 from_complement(double t) { return {1.0 - t, t}; }
};

struct Reflection {
  double value;
  double complement;
  double log_value;
  double log_complement;
  /// r - p
  double offset;
  /// (r - p) + (x - p), which vanishes to second order at the fixed point.
  double skew;

  Point01 point() const { return {value, complement}; }
};

class ReflectionMap {
 public:
  explicit ReflectionMap(double p);

  double p() const { return p_; }

  Reflection reflect(const Point01& x) const;

  /// x - p computed from whichever of value/complement is more precise.
  double offset_of(const Point01& x) const;

 private:
  static constexpr int kSeriesOrder = 12;

  double p_;
  double series_radius_;
  // e[m] multiplies delta^m in r(p + delta) = p - delta + sum_{m>=2} e[m] delta^m.
  std::array<double, kSeriesOrder + 1> e_{};
};

/// g(x) = c x^a (1-x)^b.
class WeightFunction {
 public:
  WeightFunction(double a, double b, double c = 1.0);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

  double log_eval(const Point01& x) const;
  /// Same, from log x and log(1-x).
  double log_eval_logs(double log_value, double log_complement) const;

 private:
  double a_;
  double b_;
  double c_;
};

double reflect(const ReflectionMap& map, double x);
Reflection reflect(const ReflectionMap& map, const Point01& x);

/// r_p'(x); -1 within 1e-8 of p.
double reflect_derivative(const ReflectionMap& map, double x);
double reflect_derivative(const ReflectionMap& map, const Point01& x);

/// r_p''(x); throws std::domain_error within 1e-8 of p.
double reflect_second_derivative(const ReflectionMap& map, double x);
double reflect_second_derivative(const ReflectionMap& map, const Point01& x);

/// h(x) = g(r_p(x)) / g(x).
double density_ratio(const ReflectionMap& map, const WeightFunction& w, double x);
double density_ratio(const ReflectionMap& map, const WeightFunction& w, const Point01& x);

/// Odds of one side of p against the conditional expectation of
/// -r'(X) g(r(X)) / g(X) on the other side, for X with density proportional
/// to f_p(x)^fpow g(x).
struct OddsPair {
  double lhs;
  double rhs;
};

/// lhs = P(X >= p) / P(X < p), rhs = E(-r'(X) g(r(X))/g(X) | X < p).
OddsPair odds_functional(const ReflectionMap& map, const WeightFunction& w, double fpow);

/// lhs = P(X <= p) / P(X > p), rhs = E(-r'(X) g(r(X))/g(X) | X > p).
OddsPair odds_functional_mirrored(const ReflectionMap& map, const WeightFunction& w, double fpow);

/// log f_p(x) = p log x + (1-p) log(1-x).
double log_fp(double p, const Point01& x);

}  // namespace tailbound
