#pragma once

// Property suites. Each suite sweeps a parameter grid, compares one side of
// an inequality with the other and collects the cases that fail.
//
// slack is always "how much room the claimed inequality has": positive or
// zero when it holds, negative when violated. Exact suites compare
// BigRationals and tolerate nothing; float suites accept slack down to a
// per-check tolerance.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tailbound/rational.hpp"

namespace tailbound {

struct Param {
  std::string name;
  std::string text;
  double numeric;
};

Param param(std::string name, std::int64_t v);
Param param(std::string name, double v);
Param param(std::string name, const BigRational& v);

struct Violation {
  std::string check;
  std::vector<Param> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  std::optional<std::string> lhs_exact;
  std::optional<std::string> rhs_exact;
};

struct VerificationReport {
  std::string suite;
  std::int64_t cases_run = 0;
  std::vector<Violation> violations;
  double worst_slack = std::numeric_limits<double>::infinity();
  bool passed = true;
  std::optional<std::uint64_t> seed;
  std::string grid;
  std::vector<std::string> notes;
};

/// Accumulates cases for one suite. Tallies from parallel workers are merged
/// in index order and violations are sorted on finish, so reports do not
/// depend on scheduling.
class Tally {
 public:
  /// Holds when slack >= -tolerance.
  void check(const std::string& name, std::vector<Param> params, double lhs, double rhs, double slack,
             double tolerance = 0.0);
  /// Holds when lhs >= rhs exactly.
  void check_exact_ge(const std::string& name, std::vector<Param> params, const BigRational& lhs,
                      const BigRational& rhs);
  /// Holds when slack > 0.
  void check_strict(const std::string& name, std::vector<Param> params, double lhs, double rhs, double slack);
  /// Holds when lhs > rhs exactly.
  void check_exact_gt(const std::string& name, std::vector<Param> params, const BigRational& lhs,
                      const BigRational& rhs);
  /// Holds when lhs == rhs exactly.
  void check_exact_eq(const std::string& name, std::vector<Param> params, const BigRational& lhs,
                      const BigRational& rhs);

  void merge(Tally&& other);
  void note(std::string text) { notes_.push_back(std::move(text)); }

  std::int64_t cases() const { return cases_; }
  double worst_slack() const { return worst_; }

  VerificationReport finish(std::string suite, std::string grid, std::optional<std::uint64_t> seed = {}) &&;

 private:
  std::int64_t cases_ = 0;
  double worst_ = std::numeric_limits<double>::infinity();
  std::vector<Violation> violations_;
  std::vector<std::string> notes_;
};

/// Concatenates sub-reports into one, prefixing notes with the sub-suite name.
VerificationReport merge_reports(std::string suite, const std::vector<VerificationReport>& parts);

// ---- exact binomial suites -------------------------------------------------

/// P(X_{n,mu} >= a) against P(X_{n-1,mu-1} >= a-1) and P(X_{n-1,mu} >= a),
/// larger when a > mu and smaller when mu >= a. Integer mu in [1, n-1],
/// thresholds with |a - mu| <= max_l (all thresholds when max_l < 0).
VerificationReport verify_hoeffding_lattice(std::int64_t max_n, std::int64_t max_l = -1);

/// Binomial interval mass never exceeds that of any Poisson-binomial law with
/// the same integer mean, over random rational vectors.
VerificationReport verify_hoeffding_theorem5(std::int64_t trials, std::int64_t n_max, std::uint64_t seed);

/// 1/2 >= P(X_{n,mu} >= mu+l) >= (mu/(mu+l))^(mu+l) >= (1+l)^-(1+l), with
/// the middle step an equality exactly when n = mu + l.
VerificationReport verify_theorem1_chain(std::int64_t max_n, std::int64_t max_l);

/// Floor-rounded upper and lower tail bounds on a rational mu grid, plus the
/// universal floors as one-sided limits.
VerificationReport verify_corollary2(std::int64_t max_n, std::int64_t max_l, const BigRational& step);

/// Poisson chain over integer lambda in [1, max_lambda]: sharp lower bound,
/// 1/2 above for l >= 1, monotonicity in lambda, e^-l below.
VerificationReport verify_poisson_chain(std::int64_t max_lambda, std::int64_t max_l);

/// Beta sandwich around P(X >= mu + l) on a rational mu grid, with equality
/// at integer mu and tightness just below integers.
VerificationReport verify_beta_sandwich(std::int64_t max_n, std::int64_t max_l, const BigRational& step);

/// The n-free beta lower bound at l = 1 and integer mu with mu/n <= 1/2.
VerificationReport verify_uniform_beta(std::int64_t max_n);

/// The combined bound suites.
VerificationReport verify_bound_suites(std::int64_t max_n, std::int64_t max_l);

/// |I_{mu/n}(k, n-k+1) - P(X_{n,mu} >= k)| <= 1e-12 for 1 <= k <= n.
VerificationReport verify_beta_bridge(std::int64_t max_n, const BigRational& step);

// ---- beta suites ------------------------------------------------------------

/// V ~ Beta(a,b), W ~ Beta(c,d), c >= a, d >= b, p = (c-a)/((c+d)-(a+b)):
/// W is conditionally dominated, P(W<t|W<s) <= P(V<t|V<s) for t <= s <= p and
/// P(W>t|W>s) <= P(V>t|V>s) for p <= s <= t.
VerificationReport verify_conditional_dominance(double a, double b, double c, double d,
                                                const std::vector<double>& grid);

/// Conditional dominance over a fixed list of shape pairs.
VerificationReport verify_conditional_dominance_suite();

enum class BetamonoBranch { low_simple, low_product, high_simple, high_product, none, boundary };

struct BetamonoVerdict {
  BetamonoBranch branch;
  bool holds;
  std::string description;
};

BetamonoVerdict check_betamono_conditions(double p, double a, double b);

std::string to_string(BetamonoBranch branch);

struct SweepConfig {
  double p;
  double a;
  double b;
  std::vector<double> n_grid;

  /// Throws std::domain_error unless every n gives positive shapes.
  void validate() const;
  /// n with pn + a > 0 and (1-p)n + b > 0 is required; this is the bound.
  double n_min() const;

  /// Geometric grid of `points` values from max(n_min, 0.25) to n_max, plus
  /// the integers 0..20, restricted to n > n_min, sorted, deduplicated.
  static SweepConfig with_default_grid(double p, double a, double b, double n_max = 1e4, int points = 200);
};

struct SweepPoint {
  double n;
  double value;
};

struct SweepResult {
  VerificationReport report;
  std::vector<SweepPoint> series;
  bool monotone_observed = true;
  /// +1 increasing, -1 decreasing, 0 constant.
  int direction = 0;
};

/// s_i = I_p(p n_i + a, (1-p) n_i + b). Checks single-signed consecutive
/// differences (slack 1e-11) and |s_last - 1/2| <= 2/sqrt(n_last). With
/// conjecture_mode the conditions are not required and nothing is asserted.
SweepResult sweep_beta_monotone(const SweepConfig& cfg, bool conjecture_mode);

// ---- reflection suites ------------------------------------------------------

/// Involution, defining equation, ordering in p, skew bounds, both ODEs
/// against finite differences, convexity, and the density-ratio ODE.
VerificationReport verify_reflection();

/// Monotonicity of g(r_p(x))/g(x) in each of the four sign regimes.
VerificationReport verify_hmono(int draws_per_regime, std::uint64_t seed);

/// Odds identity and its mirror over a grid of p, weights and powers.
VerificationReport verify_odds_identity();

}  // namespace tailbound
