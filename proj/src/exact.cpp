#include "tailbound/exact.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace tailbound {

namespace {

// Integer numerators C(n,k) u^k (v-u)^(n-k) over the common denominator v^n,
// where p = u/v in lowest terms.
struct ScaledTerms {
  mpz_class u;
  mpz_class w;  // v - u
  mpz_class denominator;
  std::int64_t n;

  explicit ScaledTerms(const BinomialSpec& spec) : n(spec.n()) {
    u = spec.p().numerator();
    mpz_class v = spec.p().denominator();
    w = v - u;
    mpz_pow_ui(denominator.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(n));
  }

  mpz_class term(std::int64_t k) const {
    mpz_class c;
    mpz_class a;
    mpz_class b;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    mpz_pow_ui(a.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(b.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(n - k));
    return c * a * b;
  }

  // All numerators, sharing the power tables.
  std::vector<mpz_class> all() const {
    std::vector<mpz_class> upow(static_cast<std::size_t>(n + 1));
    std::vector<mpz_class> wpow(static_cast<std::size_t>(n + 1));
    upow[0] = 1;
    wpow[0] = 1;
    for (std::int64_t k = 1; k <= n; ++k) {
      upow[static_cast<std::size_t>(k)] = upow[static_cast<std::size_t>(k - 1)] * u;
      wpow[static_cast<std::size_t>(k)] = wpow[static_cast<std::size_t>(k - 1)] * w;
    }
    std::vector<mpz_class> out(static_cast<std::size_t>(n + 1));
    mpz_class c = 1;
    for (std::int64_t k = 0; k <= n; ++k) {
      out[static_cast<std::size_t>(k)] =
          c * upow[static_cast<std::size_t>(k)] * wpow[static_cast<std::size_t>(n - k)];
      c = c * (n - k) / (k + 1);
    }
    return out;
  }
};

void require_probability(const BigRational& p, const char* what) {
  if (p.sign() < 0 || p > BigRational(1)) {
    throw std::domain_error(std::string(what) + " outside [0,1]: " + p.to_string());
  }
}

}  // namespace

BinomialSpec::BinomialSpec(std::int64_t n, BigRational mu) : n_(n), mu_(std::move(mu)) {
  if (n_ < 1) throw std::domain_error("BinomialSpec: n must be positive, got " + std::to_string(n_));
  if (mu_.sign() < 0 || mu_ > BigRational(n_)) {
    throw std::domain_error("BinomialSpec: mu must lie in [0, n], got " + mu_.to_string());
  }
  p_ = mu_ / BigRational(n_);
}

IndicatorVector::IndicatorVector(std::vector<BigRational> probs) : probs_(std::move(probs)) {
  for (const auto& p : probs_) {
    require_probability(p, "indicator probability");
    mean_ += p;
  }
}

IndicatorVector IndicatorVector::constant(std::int64_t n, const BigRational& p) {
  return IndicatorVector(std::vector<BigRational>(static_cast<std::size_t>(n), p));
}

BigRational binom_pmf(const BinomialSpec& spec, std::int64_t k) {
  if (k < 0 || k > spec.n()) {
    throw std::domain_error("binom_pmf: k=" + std::to_string(k) + " outside [0, " + std::to_string(spec.n()) + "]");
  }
  ScaledTerms t(spec);
  return BigRational(t.term(k), t.denominator);
}

std::vector<BigRational> binom_pmf_all(const BinomialSpec& spec) {
  ScaledTerms t(spec);
  auto nums = t.all();
  std::vector<BigRational> out;
  out.reserve(nums.size());
  for (const auto& num : nums) out.emplace_back(num, t.denominator);
  return out;
}

BigRational binom_upper_tail(const BinomialSpec& spec, std::int64_t k) {
  const std::int64_t n = spec.n();
  if (k <= 0) return BigRational(1);
  if (k > n) return BigRational(0);
  ScaledTerms t(spec);
  mpz_class sum = 0;
  // Sum whichever side has fewer terms.
  if (k <= n - k + 1) {
    for (std::int64_t j = 0; j < k; ++j) sum += t.term(j);
    return BigRational(t.denominator - sum, t.denominator);
  }
  for (std::int64_t j = k; j <= n; ++j) sum += t.term(j);
  return BigRational(sum, t.denominator);
}

BigRational binom_lower_tail(const BinomialSpec& spec, std::int64_t k) {
  return BigRational(1) - binom_upper_tail(spec, k + 1);
}

std::vector<BigRational> binom_upper_tails(const BinomialSpec& spec) {
  ScaledTerms t(spec);
  auto nums = t.all();
  std::vector<BigRational> out(nums.size() + 1);
  mpz_class acc = 0;
  for (std::size_t k = nums.size(); k-- > 0;) {
    acc += nums[k];
    out[k] = BigRational(acc, t.denominator);
  }
  return out;
}

std::vector<BigRational> poisson_binomial_pmf(const IndicatorVector& v) {
  if (v.size() == 0) throw std::domain_error("poisson_binomial_pmf: empty indicator vector");
  std::vector<BigRational> dist{BigRational(1)};
  dist.reserve(v.size() + 1);
  for (const auto& p : v.probs()) {
    const BigRational q = BigRational(1) - p;
    dist.emplace_back(0);
    for (std::size_t k = dist.size() - 1; k > 0; --k) {
      dist[k] = dist[k] * q + dist[k - 1] * p;
    }
    dist[0] *= q;
  }
  return dist;
}

BigRational interval_mass(const std::vector<BigRational>& pmf, std::int64_t a, std::int64_t b) {
  if (a > b) throw std::domain_error("interval_mass: a > b");
  BigRational sum;
  const auto last = static_cast<std::int64_t>(pmf.size()) - 1;
  for (std::int64_t k = std::max<std::int64_t>(a, 0); k <= std::min(b, last); ++k) {
    sum += pmf[static_cast<std::size_t>(k)];
  }
  return sum;
}

BigRational poisson_binomial_interval(const IndicatorVector& v, std::int64_t a, std::int64_t b) {
  if (a > b) throw std::domain_error("poisson_binomial_interval: a > b");
  return interval_mass(poisson_binomial_pmf(v), a, b);
}

}  // namespace tailbound
