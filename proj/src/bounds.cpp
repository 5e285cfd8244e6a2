#include "tailbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tailbound/exact.hpp"
#include "tailbound/special.hpp"

namespace tailbound {

namespace {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::domain_error("integer out of range: " + z.get_str());
  return static_cast<std::int64_t>(z.get_si());
}

// (m / (m + s))^(m + s) for integers m >= 0, s >= 1.
BigRational ratio_power(std::int64_t m, std::int64_t s) {
  return BigRational(m, m + s).pow(static_cast<unsigned>(m + s));
}

BoundResult exact_lower(BigRational value) {
  BoundResult r;
  r.value = value.to_double();
  r.exact = std::move(value);
  r.kind = BoundKind::lower;
  return r;
}

BoundResult invalid(BoundResult r, std::string reason) {
  r.valid = false;
  r.reason = std::move(reason);
  return r;
}

std::string mu_text(const BigRational& mu) { return mu.to_string(); }

}  // namespace

ShiftQuery::ShiftQuery(BigRational mu, std::int64_t l, std::optional<std::int64_t> n)
    : mu_(std::move(mu)), l_(l), n_(n) {
  if (l_ < 0) throw std::domain_error("ShiftQuery: l must be non-negative");
  if (n_) {
    if (*n_ < 1) throw std::domain_error("ShiftQuery: n must be positive");
    if (mu_.sign() < 0 || mu_ > BigRational(*n_)) throw std::domain_error("ShiftQuery: mu must lie in [0, n]");
  } else if (mu_.sign() < 0) {
    throw std::domain_error("ShiftQuery: mu must be non-negative");
  }
}

BoundResult binom_sharp_lower(std::int64_t mu, std::int64_t l) {
  if (mu < 1 || l < 1) throw std::domain_error("binom_sharp_lower: need mu >= 1 and l >= 1");
  BoundResult r = exact_lower(ratio_power(mu, l));
  r.attained_at = "n=" + std::to_string(mu + l) + ", mu=" + std::to_string(mu);
  return r;
}

BoundResult binom_universal_lower(std::int64_t l) {
  if (l < 1) throw std::domain_error("binom_universal_lower: need l >= 1");
  BoundResult r = exact_lower(ratio_power(1, l));
  r.attained_at = "n=" + std::to_string(1 + l) + ", mu=1";
  return r;
}

BoundResult binom_corollary_lower(const ShiftQuery& q) {
  const std::int64_t l = q.l();
  const std::int64_t k = to_int64(q.mu().floor());
  BoundResult r = exact_lower(ratio_power(k, l + 1));
  r.universal_floor = BigRational(1, 2 + l).pow(static_cast<unsigned>(2 + l));
  if (q.mu() < BigRational(1)) return invalid(std::move(r), "mu=" + mu_text(q.mu()) + " below 1");
  if (q.n() && q.mu() > BigRational(*q.n() - l)) {
    return invalid(std::move(r), "mu=" + mu_text(q.mu()) + " above n-l=" + std::to_string(*q.n() - l));
  }
  return r;
}

BoundResult binom_lower_tail_bound(const ShiftQuery& q) {
  if (!q.n()) throw std::domain_error("binom_lower_tail_bound: n is required");
  const std::int64_t n = *q.n();
  const std::int64_t l = q.l();
  const std::int64_t m = n - to_int64(q.mu().ceil());
  BoundResult r = exact_lower(ratio_power(std::max<std::int64_t>(m, 0), l + 1));
  if (q.mu() < BigRational(l)) return invalid(std::move(r), "mu=" + mu_text(q.mu()) + " below l");
  if (q.mu() > BigRational(n - 1)) return invalid(std::move(r), "mu=" + mu_text(q.mu()) + " above n-1");
  return r;
}

BoundResult binom_half_upper() {
  BoundResult r;
  r.exact = BigRational(1, 2);
  r.value = 0.5;
  r.kind = BoundKind::upper;
  return r;
}

BoundResult poisson_sharp_lower(std::int64_t l) {
  if (l < 0) throw std::domain_error("poisson_sharp_lower: need l >= 0");
  BoundResult r;
  // 1 - e^-1 sum_{k<=l} 1/k! is the Poisson(1) tail beyond l.
  r.value = poisson_upper_tail(PoissonSpec(1.0), l + 1);
  r.kind = BoundKind::lower;
  r.attained_at = "lambda=1";
  return r;
}

BoundResult poisson_lower_tail_bound(std::int64_t l) {
  if (l < 1) throw std::domain_error("poisson_lower_tail_bound: need l >= 1");
  BoundResult r;
  r.value = std::exp(-static_cast<double>(l));
  r.kind = BoundKind::lower;
  return r;
}

BetaSandwich beta_interpolation(const ShiftQuery& q) {
  if (!q.n()) throw std::domain_error("beta_interpolation: n is required");
  const double n = static_cast<double>(*q.n());
  const double k = (q.mu() + BigRational(q.l())).to_double();
  if (!(k > 0.0) || !(k < n)) throw std::domain_error("beta_interpolation: need 0 < mu + l < n");
  const double x = (q.mu() / BigRational(*q.n())).to_double();
  return BetaSandwich{regularized_incomplete_beta(BetaParams(k + 1.0, n - k), x),
                      regularized_incomplete_beta(BetaParams(k, n - k + 1.0), x)};
}

BoundResult uniform_beta_lower(const ShiftQuery& q) {
  if (!q.n()) throw std::domain_error("uniform_beta_lower: n is required");
  const std::int64_t n = *q.n();
  const BigRational p = q.mu() / BigRational(n);
  const BigRational a = p + BigRational(q.l());
  const BigRational b = BigRational(1) - p - BigRational(q.l()) + BigRational(1);
  BoundResult r;
  r.kind = BoundKind::lower;
  if (p > BigRational(1, 2)) return invalid(std::move(r), "mu/n above 1/2");
  if (q.mu() + BigRational(q.l()) >= BigRational(n)) return invalid(std::move(r), "mu+l not below n");
  if (a.sign() <= 0) return invalid(std::move(r), "first shape " + a.to_string() + " not positive");
  if (b.sign() <= 0) return invalid(std::move(r), "second shape " + b.to_string() + " not positive");
  r.value = regularized_incomplete_beta(BetaParams(a.to_double(), b.to_double()), p.to_double());
  return r;
}

double small_mu_threshold() { return std::log(4.0 / 3.0); }

BigRational exact_shift_upper_tail(std::int64_t n, const BigRational& mu, std::int64_t l) {
  const BinomialSpec spec(n, mu);
  return binom_upper_tail(spec, to_int64((mu + BigRational(l)).ceil()));
}

BigRational exact_shift_lower_tail(std::int64_t n, const BigRational& mu, std::int64_t l) {
  const BinomialSpec spec(n, mu);
  return binom_lower_tail(spec, to_int64((mu - BigRational(l)).floor()));
}

}  // namespace tailbound
