#include <algorithm>
#include <random>
#include <sstream>

#include "tailbound/bounds.hpp"
#include "tailbound/exact.hpp"
#include "tailbound/parallel.hpp"
#include "tailbound/report.hpp"
#include "tailbound/verify.hpp"

namespace tailbound {

namespace {

// P(X >= k) from a binom_upper_tails vector, with the usual clamping.
const BigRational& tail_at(const std::vector<BigRational>& tails, std::int64_t k) {
  static const BigRational one(1);
  static const BigRational zero(0);
  if (k <= 0) return one;
  if (k >= static_cast<std::int64_t>(tails.size())) return zero;
  return tails[static_cast<std::size_t>(k)];
}

Tally merge_all(std::vector<Tally>&& parts) {
  Tally out;
  for (auto& part : parts) out.merge(std::move(part));
  return out;
}

}  // namespace

VerificationReport verify_hoeffding_lattice(std::int64_t max_n, std::int64_t max_l) {
  if (max_n < 2) throw std::domain_error("verify_hoeffding_lattice: max_n must be at least 2");
  const auto count = static_cast<std::size_t>(max_n - 1);
  auto parts = parallel_map<Tally>(count, [&](std::size_t idx) {
    Tally t;
    const std::int64_t n = static_cast<std::int64_t>(idx) + 2;
    for (std::int64_t mu = 1; mu <= n - 1; ++mu) {
      const auto here = binom_upper_tails(BinomialSpec(n, BigRational(mu)));
      const auto shifted = binom_upper_tails(BinomialSpec(n - 1, BigRational(mu - 1)));
      const auto shorter = binom_upper_tails(BinomialSpec(n - 1, BigRational(mu)));
      for (std::int64_t a = 0; a <= n; ++a) {
        if (max_l >= 0 && std::abs(a - mu) > max_l) continue;
        std::vector<Param> ps{param("n", n), param("mu", mu), param("a", a)};
        const auto& lhs = tail_at(here, a);
        const auto& eq2 = tail_at(shifted, a - 1);
        const auto& eq3 = tail_at(shorter, a);
        if (a > mu) {
          t.check_exact_ge("drop_mean_and_threshold", ps, lhs, eq2);
          t.check_exact_ge("drop_trial", ps, lhs, eq3);
        } else {
          t.check_exact_ge("drop_mean_and_threshold_reversed", ps, eq2, lhs);
          t.check_exact_ge("drop_trial_reversed", ps, eq3, lhs);
        }
      }
    }
    return t;
  });
  std::ostringstream grid;
  grid << "n=2.." << max_n << ", integer mu=1..n-1, thresholds "
       << (max_l >= 0 ? "|a-mu|<=" + std::to_string(max_l) : std::string("a=0..n"));
  return merge_all(std::move(parts)).finish("lattice", grid.str());
}

namespace {

struct Theorem5Case {
  std::vector<BigRational> probs;
  std::int64_t mu;
  std::int64_t a;
  std::int64_t b;
};

Theorem5Case draw_case(std::mt19937_64& rng, std::int64_t n_max) {
  std::uniform_int_distribution<std::int64_t> n_dist(2, n_max);
  std::uniform_int_distribution<std::int64_t> den_dist(1, 64);
  for (;;) {
    const std::int64_t n = n_dist(rng);
    std::vector<BigRational> probs;
    BigRational sum;
    for (std::int64_t i = 0; i + 1 < n; ++i) {
      const std::int64_t den = den_dist(rng);
      std::uniform_int_distribution<std::int64_t> num_dist(0, den);
      probs.emplace_back(num_dist(rng), den);
      sum += probs.back();
    }
    const mpz_class mu_z = sum.ceil();
    if (mu_z == 0) continue;
    // The last entry tops the sum up to the next integer, so it lies in [0, 1).
    probs.push_back(BigRational(mu_z, mpz_class(1)) - sum);
    const std::int64_t mu = mu_z.get_si();
    std::uniform_int_distribution<std::int64_t> a_dist(0, mu - 1);
    std::uniform_int_distribution<std::int64_t> b_dist(mu, n);
    const std::int64_t a = a_dist(rng);
    const std::int64_t b = b_dist(rng);
    return {std::move(probs), mu, a, b};
  }
}

std::string join(const std::vector<BigRational>& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ",";
    out += x.to_string();
  }
  return out;
}

}  // namespace

VerificationReport verify_hoeffding_theorem5(std::int64_t trials, std::int64_t n_max, std::uint64_t seed) {
  if (n_max < 2 || n_max > 14) throw std::domain_error("verify_hoeffding_theorem5: n_max must lie in [2, 14]");
  if (trials < 0) throw std::domain_error("verify_hoeffding_theorem5: trials must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<Theorem5Case> cases;
  cases.reserve(static_cast<std::size_t>(trials));
  for (std::int64_t i = 0; i < trials; ++i) cases.push_back(draw_case(rng, n_max));

  auto parts = parallel_map<Tally>(cases.size(), [&](std::size_t idx) {
    Tally t;
    const auto& c = cases[idx];
    const auto n = static_cast<std::int64_t>(c.probs.size());
    const IndicatorVector v(c.probs);
    const BigRational binom = interval_mass(binom_pmf_all(BinomialSpec(n, BigRational(c.mu))), c.a, c.b);
    const BigRational mixed = poisson_binomial_interval(v, c.a, c.b);
    Param probs{"probs", join(c.probs), 0.0};
    t.check_exact_ge("interval_mass", {param("trial", static_cast<std::int64_t>(idx)), param("n", n),
                                       param("mu", c.mu), param("a", c.a), param("b", c.b), probs},
                     mixed, binom);
    return t;
  });
  std::ostringstream grid;
  grid << trials << " random vectors, n=2.." << n_max << ", denominators<=64";
  return merge_all(std::move(parts)).finish("theorem5", grid.str(), seed);
}

VerificationReport verify_theorem1_chain(std::int64_t max_n, std::int64_t max_l) {
  if (max_n < 2 || max_l < 1) throw std::domain_error("verify_theorem1_chain: need max_n >= 2, max_l >= 1");
  const BigRational half(1, 2);
  const auto count = static_cast<std::size_t>(max_n - 1);
  auto parts = parallel_map<Tally>(count, [&](std::size_t idx) {
    Tally t;
    const std::int64_t n = static_cast<std::int64_t>(idx) + 2;
    for (std::int64_t mu = 1; mu <= n - 1; ++mu) {
      const auto tails = binom_upper_tails(BinomialSpec(n, BigRational(mu)));
      for (std::int64_t l = 1; l <= max_l && mu + l <= n; ++l) {
        std::vector<Param> ps{param("n", n), param("mu", mu), param("l", l)};
        const auto& tail = tail_at(tails, mu + l);
        const BigRational sharp = *binom_sharp_lower(mu, l).exact;
        const BigRational universal = *binom_universal_lower(l).exact;
        t.check_exact_ge("half_above", ps, half, tail);
        t.check_exact_ge("sharp_below", ps, tail, sharp);
        t.check_exact_ge("universal_below_sharp", ps, sharp, universal);
        if (n == mu + l) {
          t.check_exact_eq("equality_at_n_eq_mu_plus_l", ps, tail, sharp);
        } else {
          t.check_exact_gt("strict_above_n_eq_mu_plus_l", ps, tail, sharp);
        }
      }
    }
    return t;
  });
  std::ostringstream grid;
  grid << "n=2.." << max_n << ", integer mu=1..n-l, l=1.." << max_l;
  return merge_all(std::move(parts)).finish("theorem1", grid.str());
}

VerificationReport verify_corollary2(std::int64_t max_n, std::int64_t max_l, const BigRational& step) {
  if (max_n < 1 || max_l < 0 || step.sign() <= 0) throw std::domain_error("verify_corollary2: bad grid");
  struct Cell {
    Tally tally;
    std::int64_t literal_failures = 0;
    std::string first_literal;
  };
  auto parts = parallel_map<Cell>(static_cast<std::size_t>(max_n), [&](std::size_t idx) {
    Cell cell;
    const std::int64_t n = static_cast<std::int64_t>(idx) + 1;
    for (BigRational mu; mu <= BigRational(n); mu += step) {
      for (std::int64_t l = 0; l <= max_l; ++l) {
        const ShiftQuery q(mu, l, n);
        std::vector<Param> ps{param("n", n), param("mu", mu), param("l", l)};
        const BoundResult upper = binom_corollary_lower(q);
        if (upper.valid) cell.tally.check_exact_ge("upper_tail", ps, exact_shift_upper_tail(n, mu, l), *upper.exact);
        const BoundResult lower = binom_lower_tail_bound(q);
        if (lower.valid) {
          const BigRational exact = exact_shift_lower_tail(n, mu, l);
          cell.tally.check_exact_ge("lower_tail", ps, exact, *lower.exact);
          // The same bound with mu rounded down instead of up.
          const std::int64_t m = n - mu.floor().get_si();
          const BigRational literal = BigRational(m, m + l + 1).pow(static_cast<unsigned>(m + l + 1));
          if (exact < literal) {
            if (cell.literal_failures++ == 0) {
              cell.first_literal = "n=" + std::to_string(n) + " mu=" + mu.to_string() + " l=" + std::to_string(l) +
                                   ": P=" + exact.to_string() + " < " + literal.to_string();
            }
          }
        }
      }
    }
    return cell;
  });
  Tally t;
  std::int64_t literal_failures = 0;
  std::string first_literal;
  for (auto& cell : parts) {
    literal_failures += cell.literal_failures;
    if (first_literal.empty()) first_literal = cell.first_literal;
    t.merge(std::move(cell.tally));
  }

  // Universal floors as one-sided limits mu -> 1+ at n = l + 2: the threshold
  // ceil(mu + l) is l + 2 = n, and P(X_{n,1} >= n) = (1/n)^n.
  for (std::int64_t l = 0; l <= max_l; ++l) {
    const std::int64_t n = l + 2;
    const BigRational floor_value = BigRational(1, n).pow(static_cast<unsigned>(n));
    const BigRational limit = binom_upper_tail(BinomialSpec(n, BigRational(1)), n);
    t.check_exact_eq("universal_floor_limit", {param("n", n), param("l", l)}, limit, floor_value);
    const BigRational sample = BigRational(1) + BigRational(1, 1000000);
    const BigRational gap = exact_shift_upper_tail(n, sample, l) - floor_value;
    t.note("l=" + std::to_string(l) + ": P(X >= mu+l) - (l+2)^-(l+2) at mu=1+1e-6, n=" + std::to_string(n) + " is " +
           format_double(gap.to_double()));
  }
  t.note("lower-tail bound rounds mu up; rounding down instead fails in " + std::to_string(literal_failures) +
         " cells" + (first_literal.empty() ? std::string() : " (e.g. " + first_literal + ")"));

  std::ostringstream grid;
  grid << "n=1.." << max_n << ", mu step " << step.to_string() << ", l=0.." << max_l;
  return std::move(t).finish("corollary2", grid.str());
}

}  // namespace tailbound
