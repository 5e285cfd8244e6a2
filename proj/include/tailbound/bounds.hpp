#pragma once

// Closed-form tail bounds for binomial, Poisson and beta variables.
//
// Bounds that are rational carry an exact value next to the double. Queries
// outside a bound's validity range come back flagged (valid == false) with a
// reason instead of throwing, so sweeps can map where a bound stops applying.

#include <cstdint>
#include <optional>
#include <string>

#include "tailbound/rational.hpp"

namespace tailbound {

/// Centre mu (lambda for Poisson), shift l, and trial count n when binomial.
class ShiftQuery {
 public:
  ShiftQuery(BigRational mu, std::int64_t l, std::optional<std::int64_t> n = std::nullopt);

  const BigRational& mu() const { return mu_; }
  std::int64_t l() const { return l_; }
  const std::optional<std::int64_t>& n() const { return n_; }

 private:
  BigRational mu_;
  std::int64_t l_;
  std::optional<std::int64_t> n_;
};

enum class BoundKind { lower, upper };

struct BoundResult {
  double value = 0.0;
  std::optional<BigRational> exact;
  BoundKind kind = BoundKind::lower;
  std::optional<std::string> attained_at;
  bool valid = true;
  std::string reason;
  /// Parameter-free floor reported next to the floor-rounded bound.
  std::optional<BigRational> universal_floor;
};

/// (mu / (mu + l))^(mu + l), attained at n = mu + l.
BoundResult binom_sharp_lower(std::int64_t mu, std::int64_t l);

/// (1 + l)^-(1 + l), attained at mu = 1, n = 1 + l.
BoundResult binom_universal_lower(std::int64_t l);

/// Lower bound on P(X >= mu + l) through floor(mu), for 1 <= mu <= n - l.
BoundResult binom_corollary_lower(const ShiftQuery& q);

/// Lower bound on P(X <= mu - l), for l <= mu <= n - 1. Obtained from
/// binom_corollary_lower applied to n - X, so it rounds mu up.
BoundResult binom_lower_tail_bound(const ShiftQuery& q);

/// The constant 1/2 above P(X >= mu + l) for integer mu >= 1, l >= 1.
BoundResult binom_half_upper();

/// 1 - e^-1 sum_{k<=l} 1/k!, attained at lambda = 1.
BoundResult poisson_sharp_lower(std::int64_t l);

/// e^-l, a lower bound on P(Z <= lambda - l) for integer lambda > l.
BoundResult poisson_lower_tail_bound(std::int64_t l);

/// Beta probabilities enclosing P(X >= mu + l):
///   lower = I_{mu/n}(mu + l + 1, n - mu - l)
///   upper = I_{mu/n}(mu + l, n - mu - l + 1)
/// with lower < P(X >= mu + l) <= upper and equality on the right exactly when
/// mu is an integer.
struct BetaSandwich {
  double lower;
  double upper;
};
BetaSandwich beta_interpolation(const ShiftQuery& q);

/// n-free lower bound I_{mu/n}(mu/n + l, (1 - mu/n) - l + 1) on
/// P(X >= mu + l). Needs mu/n <= 1/2, mu + l < n and positive shapes.
BoundResult uniform_beta_lower(const ShiftQuery& q);

/// ln(4/3): below this mean, P(X >= mu) >= 1/4 may fail.
double small_mu_threshold();

/// Exact P(X_{n,mu} >= mu + l) = P(X >= ceil(mu + l)).
BigRational exact_shift_upper_tail(std::int64_t n, const BigRational& mu, std::int64_t l);

/// Exact P(X_{n,mu} <= mu - l) = P(X <= floor(mu - l)).
BigRational exact_shift_lower_tail(std::int64_t n, const BigRational& mu, std::int64_t l);

}  // namespace tailbound
