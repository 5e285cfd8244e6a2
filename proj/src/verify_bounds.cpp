#include <algorithm>
#include <cmath>
#include <sstream>

#include "tailbound/bounds.hpp"
#include "tailbound/exact.hpp"
#include "tailbound/parallel.hpp"
#include "tailbound/report.hpp"
#include "tailbound/special.hpp"
#include "tailbound/verify.hpp"

namespace tailbound {

namespace {

constexpr double kPoissonTol = 1e-12;
constexpr double kSandwichTol = 1e-10;
constexpr double kIntegerEqualityTol = 1e-12;
constexpr double kTightnessGap = 1e-3;
constexpr double kBridgeTol = 1e-12;

Tally merge_all(std::vector<Tally>&& parts) {
  Tally out;
  for (auto& part : parts) out.merge(std::move(part));
  return out;
}

}  // namespace

VerificationReport verify_poisson_chain(std::int64_t max_lambda, std::int64_t max_l) {
  if (max_lambda < 1 || max_l < 0) throw std::domain_error("verify_poisson_chain: bad grid");
  Tally t;
  std::vector<double> previous(static_cast<std::size_t>(max_l + 1), 0.0);
  for (std::int64_t lambda = 1; lambda <= max_lambda; ++lambda) {
    const PoissonSpec spec(static_cast<double>(lambda));
    for (std::int64_t l = 0; l <= max_l; ++l) {
      std::vector<Param> ps{param("lambda", lambda), param("l", l)};
      const double tail = poisson_upper_tail(spec, lambda + l);
      const double sharp = poisson_sharp_lower(l).value;
      t.check("sharp_below", ps, tail, sharp, tail - sharp, kPoissonTol);
      if (l >= 1) t.check("half_above", ps, 0.5, tail, 0.5 - tail);
      auto& prev = previous[static_cast<std::size_t>(l)];
      if (lambda >= 2) t.check("monotone_in_lambda", ps, tail, prev, tail - prev, kPoissonTol);
      prev = tail;
      if (lambda == 1 && l == 0) {
        const double target = 1.0 - std::exp(-1.0);
        t.check("value_at_lambda1_l0", ps, tail, target, -std::fabs(tail - target), 1e-14);
      }
    }
    for (std::int64_t l = 1; l < lambda; ++l) {
      const double lower = poisson_lower_tail(spec, lambda - l);
      const double bound = poisson_lower_tail_bound(l).value;
      t.check("lower_tail", {param("lambda", lambda), param("l", l)}, lower, bound, lower - bound, kPoissonTol);
    }
  }
  t.note("the 1/2 upper bound is checked for l >= 1 only; at l = 0, P(Z_1 >= 1) = 1 - 1/e > 1/2");
  std::ostringstream grid;
  grid << "integer lambda=1.." << max_lambda << ", l=0.." << max_l << "; lower tail 1<=l<lambda";
  return std::move(t).finish("poisson", grid.str());
}

VerificationReport verify_beta_sandwich(std::int64_t max_n, std::int64_t max_l, const BigRational& step) {
  if (max_n < 1 || max_l < 0 || step.sign() <= 0) throw std::domain_error("verify_beta_sandwich: bad grid");
  auto parts = parallel_map<Tally>(static_cast<std::size_t>(max_n), [&](std::size_t idx) {
    Tally t;
    const std::int64_t n = static_cast<std::int64_t>(idx) + 1;
    auto one = [&](const BigRational& mu, std::int64_t l, bool near_integer) {
      const BigRational k = mu + BigRational(l);
      if (mu.sign() <= 0 || k >= BigRational(n)) return;
      std::vector<Param> ps{param("n", n), param("mu", mu), param("l", l)};
      const double exact = exact_shift_upper_tail(n, mu, l).to_double();
      const BetaSandwich s = beta_interpolation(ShiftQuery(mu, l, n));
      if (near_integer) {
        t.check("tight_below_integer", ps, s.upper - exact, kTightnessGap, kTightnessGap - (s.upper - exact));
        return;
      }
      t.check("lower_below_exact", ps, s.lower, exact, exact - s.lower, kSandwichTol);
      t.check_strict("lower_strictly_below_exact", ps, s.lower, exact, exact - s.lower);
      t.check("exact_below_upper", ps, exact, s.upper, s.upper - exact, kSandwichTol);
      if (mu.is_integer()) {
        t.check("integer_equality", ps, s.upper, exact, -std::fabs(s.upper - exact), kIntegerEqualityTol);
      } else {
        t.check_strict("exact_strictly_below_upper", ps, exact, s.upper, s.upper - exact);
      }
    };
    for (BigRational mu; mu <= BigRational(n); mu += step) {
      for (std::int64_t l = 0; l <= max_l; ++l) one(mu, l, false);
    }
    const BigRational eps(1, 10000);
    for (std::int64_t k = 1; k <= n; ++k) {
      for (std::int64_t l = 0; l <= max_l; ++l) one(BigRational(k) - eps, l, true);
    }
    return t;
  });
  Tally t = merge_all(std::move(parts));
  t.note("lower = I_{mu/n}(mu+l+1, n-mu-l), upper = I_{mu/n}(mu+l, n-mu-l+1); upper is the one equal at integer mu");
  std::ostringstream grid;
  grid << "n=1.." << max_n << ", 0<mu, mu+l<n, mu step " << step.to_string() << " plus mu=k-1e-4, l=0.." << max_l;
  return std::move(t).finish("sandwich", grid.str());
}

VerificationReport verify_uniform_beta(std::int64_t max_n) {
  if (max_n < 2) throw std::domain_error("verify_uniform_beta: max_n must be at least 2");
  Tally t;
  std::int64_t fractional_failures = 0;
  std::string first_failure;
  const BigRational step(1, 10);
  for (std::int64_t n = 2; n <= max_n; ++n) {
    for (BigRational mu; mu <= BigRational(n, 2); mu += step) {
      const ShiftQuery q(mu, 1, n);
      const BoundResult r = uniform_beta_lower(q);
      if (!r.valid) continue;
      const double exact = exact_shift_upper_tail(n, mu, 1).to_double();
      if (mu.is_integer()) {
        t.check("below_exact", {param("n", n), param("mu", mu), param("l", std::int64_t{1})}, r.value, exact,
                exact - r.value, 1e-10);
      } else if (exact < r.value - 1e-10) {
        if (fractional_failures++ == 0) {
          first_failure = "n=" + std::to_string(n) + " mu=" + mu.to_string() + ": P=" + format_double(exact) +
                          " < " + format_double(r.value);
        }
      }
    }
  }
  t.note("checked at integer mu; at fractional mu on step 1/10 the bound exceeds the tail in " +
         std::to_string(fractional_failures) + " cells" +
         (first_failure.empty() ? std::string() : " (e.g. " + first_failure + ")"));
  std::ostringstream grid;
  grid << "n=2.." << max_n << ", integer mu with mu/n<=1/2, l=1";
  return std::move(t).finish("uniform_beta", grid.str());
}

VerificationReport verify_bound_suites(std::int64_t max_n, std::int64_t max_l) {
  const std::int64_t n40 = std::min<std::int64_t>(max_n, 40);
  std::vector<VerificationReport> parts;
  parts.push_back(verify_theorem1_chain(max_n, std::max<std::int64_t>(max_l, 1)));
  parts.push_back(verify_corollary2(n40, std::min<std::int64_t>(max_l, 3), BigRational(1, 10)));
  parts.push_back(verify_poisson_chain(40, max_l));
  parts.push_back(verify_beta_sandwich(n40, std::min<std::int64_t>(max_l, 2), BigRational(1, 10)));
  parts.push_back(verify_uniform_beta(n40));
  return merge_reports("bounds", parts);
}

VerificationReport verify_beta_bridge(std::int64_t max_n, const BigRational& step) {
  if (max_n < 1 || step.sign() <= 0) throw std::domain_error("verify_beta_bridge: bad grid");
  auto parts = parallel_map<Tally>(static_cast<std::size_t>(max_n), [&](std::size_t idx) {
    Tally t;
    const std::int64_t n = static_cast<std::int64_t>(idx) + 1;
    for (BigRational mu; mu <= BigRational(n); mu += step) {
      const BinomialSpec spec(n, mu);
      const auto tails = binom_upper_tails(spec);
      const double x = spec.p().to_double();
      for (std::int64_t k = 1; k <= n; ++k) {
        const double exact = tails[static_cast<std::size_t>(k)].to_double();
        const double beta = regularized_incomplete_beta(BetaParams(static_cast<double>(k), static_cast<double>(n - k + 1)), x);
        t.check("bridge", {param("n", n), param("mu", mu), param("k", k)}, beta, exact, -std::fabs(beta - exact),
                kBridgeTol);
      }
    }
    return t;
  });
  std::ostringstream grid;
  grid << "1<=k<=n<=" << max_n << ", mu step " << step.to_string();
  return merge_all(std::move(parts)).finish("bridge", grid.str());
}

}  // namespace tailbound
