#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tailbound/special.hpp"

namespace tailbound {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606065121;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// zeta(k) - 1 for k = 2, 3, ...
constexpr std::array<double, 40> kZetaMinusOne = {
    0.64493406684822643647,     0.2020569031595942854,      0.082323233711138191516,
    0.036927755143369926331,    0.017343061984449139715,    0.0083492773819228268398,
    0.0040773561979443393787,   0.0020083928260822144179,   0.00099457512781808533715,
    0.0004941886041194645587,   0.00024608655330804829864,  0.00012271334757848914675,
    6.1248135058704829259e-05,  3.0588236307020493552e-05,  1.5282259408651871733e-05,
    7.6371976378997622736e-06,  3.8172932649998398565e-06,  1.9082127165539389257e-06,
    9.5396203387279611315e-07,  4.7693298678780646312e-07,  2.3845050272773299e-07,
    1.1921992596531107307e-07,  5.9608189051259479612e-08,  2.9803503514652280186e-08,
    1.4901554828365041235e-08,  7.450711789835429492e-09,   3.7253340247884570548e-09,
    1.8626597235130490064e-09,  9.3132743241966818287e-10,  4.656629065033784073e-10,
    2.328311833676505492e-10,   1.1641550172700519776e-10,  5.8207720879027008892e-11,
    2.9103850444970996869e-11,  1.4551921891041984236e-11,  7.2759598350574810145e-12,
    3.6379795473786511902e-12,  1.8189896503070659476e-12,  9.0949478402638892825e-13,
    4.5474737830421540268e-13,
};

// sum_{k>=2} (-1)^k (zeta(k) - 1) z^k / k for |z| <= 1/2.
double zeta_tail_series(double z) {
  double sum = 0.0;
  double power = z;
  for (std::size_t i = 0; i < kZetaMinusOne.size(); ++i) {
    power *= -z;
    const double k = static_cast<double>(i + 2);
    const double term = kZetaMinusOne[i] * power / k;
    sum += term;
    if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
  }
  // The loop multiplies by -z, so power carries (-1)^(k-1) z^k; flip once.
  return -sum;
}

// ln Gamma(1 + z) for |z| <= 1/2.
double lgamma1p(double z) { return -kEulerGamma * z + (z - std::log1p(z)) + zeta_tail_series(z); }

// ln Gamma(2 + z) for |z| <= 1/2.
double lgamma2p(double z) { return (1.0 - kEulerGamma) * z + zeta_tail_series(z); }

// Bernoulli terms B_2k / (2k (2k-1)).
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,        1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,        -691.0 / 360360.0,   1.0 / 156.0,   -3617.0 / 122400.0,
};

double stirling_series(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double acc = 0.0;
  for (std::size_t i = kStirling.size(); i-- > 0;) acc = acc * inv2 + kStirling[i];
  return acc * inv;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || std::isinf(x)) {
    throw std::domain_error("log_gamma: argument must be positive and finite, got " + std::to_string(x));
  }
  if (x < 0.5) return lgamma1p(x) - std::log(x);
  if (x < 1.5) return lgamma1p(x - 1.0);
  if (x < 2.5) return lgamma2p(x - 2.0);
  if (x < 10.0) {
    // Shift down into [1.5, 2.5) and account for the product.
    double y = x;
    double product = 1.0;
    while (y >= 2.5) {
      y -= 1.0;
      product *= y;
    }
    return lgamma2p(y - 2.0) + std::log(product);
  }
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + stirling_series(x);
}

double stirling_correction(double x) {
  if (!(x > 0.0)) throw std::domain_error("stirling_correction: argument must be positive");
  if (x >= 10.0) return stirling_series(x);
  // delta(x) = delta(x + 1) + (x + 1/2) ln(1 + 1/x) - 1
  double shift = 0.0;
  double y = x;
  while (y < 10.0) {
    shift += (y + 0.5) * std::log1p(1.0 / y) - 1.0;
    y += 1.0;
  }
  return stirling_series(y) + shift;
}

double log_beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("log_beta: shapes must be positive");
  const double small = std::fmin(a, b);
  const double large = std::fmax(a, b);
  if (large < 10.0) return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
  const double c = a + b;
  if (small >= 10.0) {
    return kHalfLog2Pi + (a - 0.5) * std::log(a) + (b - 0.5) * std::log(b) - (c - 0.5) * std::log(c) +
           stirling_correction(a) + stirling_correction(b) - stirling_correction(c);
  }
  // lgamma(large) - lgamma(large + small) without the large cancellation.
  const double diff = -(large - 0.5) * std::log1p(small / large) - small * std::log(c) + small +
                      stirling_correction(large) - stirling_correction(c);
  return log_gamma(small) + diff;
}

}  // namespace tailbound
