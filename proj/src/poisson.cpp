#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tailbound/special.hpp"

namespace tailbound {

namespace {

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// x log(x / m) + m - x, accurate when x is close to m.
double bd0(double x, double m) {
  if (std::fabs(x - m) < 0.1 * (x + m)) {
    double v = (x - m) / (x + m);
    double s = (x - m) * v;
    double ej = 2.0 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      const double next = s + ej / (2 * j + 1);
      if (next == s) return next;
      s = next;
    }
    return s;
  }
  return x * std::log(x / m) + m - x;
}

double pmf(double lambda, std::int64_t k) {
  if (k < 0) return 0.0;
  if (k == 0) return std::exp(-lambda);
  const double x = static_cast<double>(k);
  return std::exp(-stirling_correction(x) - bd0(x, lambda)) / std::sqrt(2.0 * std::numbers::pi * x);
}

// sum_{j=0..k} pmf(j), walking down from k. Intended for k < lambda.
double sum_below(double lambda, std::int64_t k) {
  CompensatedSum acc;
  double term = pmf(lambda, k);
  for (std::int64_t j = k; j >= 0; --j) {
    acc.add(term);
    if (term < 1e-18 * acc.value()) break;
    term *= static_cast<double>(j) / lambda;
  }
  return acc.value();
}

// sum_{j>=k} pmf(j), walking up from k. Intended for k > lambda.
double sum_above(double lambda, std::int64_t k) {
  CompensatedSum acc;
  double term = pmf(lambda, k);
  for (std::int64_t j = k;; ++j) {
    acc.add(term);
    if (term == 0.0 || term < 1e-18 * acc.value()) break;
    term *= lambda / static_cast<double>(j + 1);
  }
  return acc.value();
}

}  // namespace

PoissonSpec::PoissonSpec(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0) || std::isinf(lambda)) {
    throw std::domain_error("PoissonSpec: lambda must be positive and finite, got " + std::to_string(lambda));
  }
}

double poisson_pmf(const PoissonSpec& spec, std::int64_t k) { return pmf(spec.lambda(), k); }

double poisson_upper_tail(const PoissonSpec& spec, std::int64_t k) {
  const double lambda = spec.lambda();
  if (k <= 0) return 1.0;
  if (static_cast<double>(k - 1) < lambda) return 1.0 - sum_below(lambda, k - 1);
  return sum_above(lambda, k);
}

double poisson_lower_tail(const PoissonSpec& spec, std::int64_t k) {
  const double lambda = spec.lambda();
  if (k < 0) return 0.0;
  if (static_cast<double>(k) < lambda) return sum_below(lambda, k);
  return 1.0 - sum_above(lambda, k + 1);
}

}  // namespace tailbound
