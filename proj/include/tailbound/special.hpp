#pragma once

// Floating-point special functions: log-gamma, the beta function and its
// regularized incomplete integral, the beta density, and Poisson tails.
//
// All functions are pure and throw std::domain_error outside their domain.

#include <cstdint>

namespace tailbound {

/// Shape pair (a, b) of a Beta(a, b) law. Both shapes must be positive.
class BetaParams {
 public:
  BetaParams(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }

 private:
  double a_;
  double b_;
};

/// Poisson law with positive mean lambda.
class PoissonSpec {
 public:
  explicit PoissonSpec(double lambda);

  double lambda() const { return lambda_; }

 private:
  double lambda_;
};

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// lgamma(x) - [(x - 1/2) ln x - x + ln(2 pi)/2], the Stirling remainder.
double stirling_correction(double x);

/// ln B(a, b).
double log_beta(double a, double b);

/// I_x(a, b) = P(W <= x) for W ~ Beta(a, b). Requires 0 <= x <= 1.
double regularized_incomplete_beta(const BetaParams& params, double x);

/// 1 - I_x(a, b), computed without cancellation.
double incomplete_beta_complement(const BetaParams& params, double x);

/// Density x^(a-1) (1-x)^(b-1) / B(a, b). At a singular endpoint returns
/// +infinity; outside [0, 1] throws.
double beta_density(const BetaParams& params, double x);

/// P(Z = k).
double poisson_pmf(const PoissonSpec& spec, std::int64_t k);

/// P(Z >= k).
double poisson_upper_tail(const PoissonSpec& spec, std::int64_t k);

/// P(Z <= k).
double poisson_lower_tail(const PoissonSpec& spec, std::int64_t k);

}  // namespace tailbound
