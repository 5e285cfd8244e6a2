#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tailbound/special.hpp"

namespace tailbound {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;

void require_unit(double x, const char* who) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(who) + ": x must lie in [0,1], got " + std::to_string(x));
  }
}

// log of x^a y^b / B(a, b) with y = 1 - x supplied by the caller.
double log_prefactor(double a, double b, double x, double y) {
  if (a >= 10.0 && b >= 10.0) {
    // Expand around the mean a/c so the large terms cancel analytically.
    const double c = a + b;
    const double num = std::fma(x, c, -a);
    return a * std::log1p(num / a) + b * std::log1p(-num / b) +
           0.5 * (std::log(a) + std::log(b) - std::log(c)) - kHalfLog2Pi - stirling_correction(a) -
           stirling_correction(b) + stirling_correction(c);
  }
  const double lx = x < 0.5 ? std::log(x) : std::log1p(-y);
  const double ly = y < 0.5 ? std::log(y) : std::log1p(-x);
  return a * lx + b * ly - log_beta(a, b);
}

double continued_fraction(double a, double b, double x) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double dm = m;
    const double m2 = 2.0 * dm;
    double aa = dm * (b - dm) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + dm) * (qab + dm) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("incomplete beta: continued fraction did not converge");
}

// sum_n (a+b)_n / (a+1)_n x^n
double hypergeometric_series(double a, double b, double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < kMaxIter; ++n) {
    term *= (a + b + n) / (a + 1.0 + n) * x;
    sum += term;
    if (term < kEps * sum) return sum;
  }
  throw std::runtime_error("incomplete beta: series did not converge");
}

// I_x(a, b) assuming x lies left of the switch point.
double lower_part(double a, double b, double x, double y) {
  if (x == 0.0) return 0.0;
  const double pre = std::exp(log_prefactor(a, b, x, y)) / a;
  if (x <= 0.5 && b * x <= 1.0) return pre * hypergeometric_series(a, b, x);
  return pre * continued_fraction(a, b, x);
}

// Returns I_x(a,b) when want_complement is false, else 1 - I_x(a,b); each is
// computed directly on the side where it is small.
double evaluate(const BetaParams& params, double x, bool want_complement) {
  const double a = params.a();
  const double b = params.b();
  const double y = 1.0 - x;
  if (x == 0.0) return want_complement ? 1.0 : 0.0;
  if (x == 1.0) return want_complement ? 0.0 : 1.0;
  if (x > (a + 1.0) / (a + b + 2.0)) {
    const double swapped = lower_part(b, a, y, x);
    return want_complement ? swapped : 1.0 - swapped;
  }
  const double direct = lower_part(a, b, x, y);
  return want_complement ? 1.0 - direct : direct;
}

}  // namespace

BetaParams::BetaParams(double a, double b) : a_(a), b_(b) {
  if (!(a > 0.0) || !(b > 0.0) || std::isinf(a) || std::isinf(b)) {
    throw std::domain_error("BetaParams: shapes must be positive and finite, got (" + std::to_string(a) + ", " +
                            std::to_string(b) + ")");
  }
}

double regularized_incomplete_beta(const BetaParams& params, double x) {
  require_unit(x, "regularized_incomplete_beta");
  return evaluate(params, x, false);
}

double incomplete_beta_complement(const BetaParams& params, double x) {
  require_unit(x, "incomplete_beta_complement");
  return evaluate(params, x, true);
}

double beta_density(const BetaParams& params, double x) {
  require_unit(x, "beta_density");
  const double a = params.a();
  const double b = params.b();
  if (x == 0.0) {
    if (a < 1.0) return std::numeric_limits<double>::infinity();
    return a == 1.0 ? b : 0.0;
  }
  if (x == 1.0) {
    if (b < 1.0) return std::numeric_limits<double>::infinity();
    return b == 1.0 ? a : 0.0;
  }
  const double y = 1.0 - x;
  return std::exp(log_prefactor(a, b, x, y)) / (x * y);
}

}  // namespace tailbound
