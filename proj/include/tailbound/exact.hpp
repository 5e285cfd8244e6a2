#pragma once

// Exact binomial and Poisson-binomial probabilities.
//
// Every quantity here is a BigRational; nothing is rounded. These values are
// the ground truth against which the floating-point routines and the bound
// formulas are checked.

#include <cstdint>
#include <vector>

#include "tailbound/rational.hpp"

namespace tailbound {

/// Binomial law with n trials and mean mu, so success probability mu / n.
class BinomialSpec {
 public:
  BinomialSpec(std::int64_t n, BigRational mu);

  std::int64_t n() const { return n_; }
  const BigRational& mu() const { return mu_; }
  const BigRational& p() const { return p_; }

 private:
  std::int64_t n_;
  BigRational mu_;
  BigRational p_;
};

/// Success probabilities of independent indicators Y_1..Y_n.
class IndicatorVector {
 public:
  explicit IndicatorVector(std::vector<BigRational> probs);

  /// n copies of p.
  static IndicatorVector constant(std::int64_t n, const BigRational& p);

  const std::vector<BigRational>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  /// Sum of the success probabilities, i.e. the mean of the sum.
  const BigRational& mean() const { return mean_; }

 private:
  std::vector<BigRational> probs_;
  BigRational mean_;
};

/// P(X = k). Throws std::domain_error unless 0 <= k <= n.
BigRational binom_pmf(const BinomialSpec& spec, std::int64_t k);

/// The whole mass function, indices 0..n.
std::vector<BigRational> binom_pmf_all(const BinomialSpec& spec);

/// P(X >= k); 1 for k <= 0, 0 for k > n.
BigRational binom_upper_tail(const BinomialSpec& spec, std::int64_t k);

/// P(X <= k); 0 for k < 0, 1 for k >= n.
BigRational binom_lower_tail(const BinomialSpec& spec, std::int64_t k);

/// P(X >= k) for every k in 0..n+1 (the last entry is 0).
std::vector<BigRational> binom_upper_tails(const BinomialSpec& spec);

/// Distribution of the sum of the indicators, by convolving one indicator at a
/// time. Result has size() + 1 entries summing to exactly 1.
std::vector<BigRational> poisson_binomial_pmf(const IndicatorVector& v);

/// P(a <= sum <= b). Requires a <= b; ranges outside 0..n contribute nothing.
BigRational poisson_binomial_interval(const IndicatorVector& v, std::int64_t a, std::int64_t b);

/// Same as above on an already computed mass function.
BigRational interval_mass(const std::vector<BigRational>& pmf, std::int64_t a, std::int64_t b);

}  // namespace tailbound
