#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "tailbound/parallel.hpp"
#include "tailbound/reflection.hpp"
#include "tailbound/report.hpp"
#include "tailbound/verify.hpp"

namespace tailbound {

namespace {

constexpr double kInvolutionTol = 1e-10;
constexpr double kResidualTol = 1e-13;
constexpr double kOdeTol = 1e-10;
constexpr double kFirstFdTol = 1e-6;
constexpr double kSecondFdTol = 1e-4;
constexpr double kConvexTol = 1e-9;
constexpr double kHdeqTol = 1e-8;
constexpr double kHmonoTol = 1e-10;
constexpr double kOddsTol = 1e-8;
// Finite differences straddling the fixed point mix the series and solver
// branches; those x are left to the ODE residual checks.
constexpr double kFdExclusion = 5e-3;

Tally merge_all(std::vector<Tally>&& parts) {
  Tally out;
  for (auto& part : parts) out.merge(std::move(part));
  return out;
}

std::vector<double> p_grid() {
  std::vector<double> ps;
  for (int i = 1; i <= 19; ++i) ps.push_back(i / 20.0);
  return ps;
}

// Differences of r between two points, taken on whichever side keeps digits.
double reflect_diff(const Reflection& hi, const Reflection& lo) {
  if (hi.value >= 0.5 && lo.value >= 0.5) return lo.complement - hi.complement;
  return hi.value - lo.value;
}

struct Stencil {
  Reflection m2, m1, c, p1, p2;
};

Stencil stencil(const ReflectionMap& map, double x, double h) {
  auto at = [&](double y) { return map.reflect(Point01::from_value(y)); };
  return {at(x - 2 * h), at(x - h), at(x), at(x + h), at(x + 2 * h)};
}

double fd_first(const Stencil& s, double h) {
  return (8.0 * reflect_diff(s.p1, s.m1) - reflect_diff(s.p2, s.m2)) / (12.0 * h);
}

double fd_second(const Stencil& s, double h) {
  // -f2 + 16 f1 - 30 f0 + 16 f-1 - f-2, grouped as differences from f0.
  const double d1 = reflect_diff(s.p1, s.c) + reflect_diff(s.m1, s.c);
  const double d2 = reflect_diff(s.p2, s.c) + reflect_diff(s.m2, s.c);
  return (16.0 * d1 - d2) / (12.0 * h * h);
}

struct Weight {
  double a, b;
};

void reflection_at_p(Tally& t, double p, std::size_t idx, const std::vector<double>& ps) {
  const ReflectionMap map(p);
  const double log_fp_tol = kResidualTol;
  std::vector<Reflection> rs;
  rs.reserve(999);
  for (int i = 1; i <= 999; ++i) {
    const double x = i / 1000.0;
    const Point01 pt = Point01::from_value(x);
    const Reflection r = map.reflect(pt);
    rs.push_back(r);
    std::vector<Param> ps_{param("p", p), param("x", x)};

    const Reflection back = map.reflect(r.point());
    const double inv = x >= 0.5 ? std::fabs(back.complement - pt.complement) : std::fabs(back.value - x);
    t.check("involution", ps_, back.value, x, -inv, kInvolutionTol);

    const double fx = std::exp(log_fp(p, pt));
    const double fr = std::exp(p * r.log_value + (1.0 - p) * r.log_complement);
    t.check("defining_residual", ps_, fr, fx, -std::fabs(fr - fx), log_fp_tol);

    if (idx + 1 < ps.size()) {
      const Reflection next = ReflectionMap(ps[idx + 1]).reflect(pt);
      const double gap = (r.value >= 0.5 && next.value >= 0.5) ? r.complement - next.complement : next.value - r.value;
      t.check_strict("ordering_in_p", {param("p", p), param("q", ps[idx + 1]), param("x", x)}, r.value, next.value,
                     gap);
    }

    if (p < 0.5) {
      t.check("skew_lower", ps_, r.value, 2 * p - x, r.skew);
      t.check_strict("skew_upper", ps_, r.value, 1.0 - x, r.complement - x);
    } else if (p > 0.5) {
      t.check("skew_upper", ps_, r.value, 2 * p - x, -r.skew);
      t.check_strict("skew_lower", ps_, r.value, 1.0 - x, x - r.complement);
    } else {
      t.check("skew_equal", ps_, r.value, 1.0 - x, -std::fabs(r.complement - x));
    }

    if (i > 1 && i < 999) {
      const double d1 = reflect_derivative(map, pt);
      const double residual = (p - r.value) * x * (1.0 - x) * d1 - (p - x) * r.value * r.complement;
      t.check("property4_residual", ps_, residual, 0.0, -std::fabs(residual), kOdeTol);
      if (d1 >= 0.0) t.check("derivative_negative", ps_, d1, 0.0, -d1);
    }

    if (std::fabs(x - p) >= kFdExclusion) {
      const double h = std::min(1e-3, 5e-3 * std::min(x, 1.0 - x));
      const Stencil s = stencil(map, x, h);
      const double d1 = reflect_derivative(map, pt);
      const double fd1 = fd_first(s, h);
      t.check("derivative_vs_fd", ps_, d1, fd1, kFirstFdTol * std::max(1.0, std::fabs(d1)) - std::fabs(d1 - fd1));
      const double d2 = reflect_second_derivative(map, pt);
      const double fd2 = fd_second(s, h);
      t.check("second_derivative_vs_fd", ps_, d2, fd2,
              kSecondFdTol * (d2 == 0.0 ? 1.0 : std::fabs(d2)) - std::fabs(d2 - fd2));
    }
  }

  // Convexity on the x grid itself: r(x+dx) - 2 r(x) + r(x-dx).
  for (std::size_t i = 1; i + 1 < rs.size(); ++i) {
    const double second = reflect_diff(rs[i + 1], rs[i]) + reflect_diff(rs[i - 1], rs[i]);
    std::vector<Param> ps_{param("p", p), param("x", static_cast<double>(i + 1) / 1000.0)};
    if (p <= 0.5) t.check("convex", ps_, second, 0.0, second, kConvexTol);
    if (p >= 0.5) t.check("concave", ps_, second, 0.0, -second, kConvexTol);
  }

  // Density-ratio ODE divided through by h, with (log h)' from five-point
  // differences: h spans many orders of magnitude near the endpoints.
  static const Weight weights[] = {{1, 0}, {0, 1}, {2, 1}, {-0.5, 1.5}, {1.5, -0.5}, {3, 3}};
  for (const auto& wt : weights) {
    const WeightFunction w(wt.a, wt.b);
    auto log_h = [&](double y) { return std::log(density_ratio(map, w, y)); };
    for (int i = 1; i <= 99; ++i) {
      const double x = i / 100.0;
      if (std::fabs(x - p) < kFdExclusion) continue;
      const double step = std::min(1e-4, 2e-3 * std::min(x, 1.0 - x));
      const double dlog =
          (8.0 * (log_h(x + step) - log_h(x - step)) - (log_h(x + 2 * step) - log_h(x - 2 * step))) / (12.0 * step);
      const Reflection r = map.reflect(Point01::from_value(x));
      const double lhs = -r.offset * x * (1.0 - x) * dlog;
      const double rhs = (wt.a - p * (wt.a + wt.b)) * (r.value - x);
      t.check("hdeq_residual", {param("p", p), param("a", wt.a), param("b", wt.b), param("x", x)}, lhs, rhs,
              kHdeqTol - std::fabs(lhs - rhs));
    }
  }
}

}  // namespace

VerificationReport verify_reflection() {
  const std::vector<double> ps = p_grid();
  auto parts = parallel_map<Tally>(ps.size(), [&](std::size_t idx) {
    Tally t;
    reflection_at_p(t, ps[idx], idx, ps);
    return t;
  });
  Tally t = merge_all(std::move(parts));
  t.note("derivative checks skip |x-p| < 0.005; FD step min(1e-3, 0.005 min(x,1-x)); second derivative relative (absolute where r''=0); hdeq residual taken relative to h");
  return std::move(t).finish("reflection", "p=0.05..0.95 step 0.05, x=0.001..0.999 step 0.001; hdeq x step 0.01");
}

VerificationReport verify_hmono(int draws_per_regime, std::uint64_t seed) {
  if (draws_per_regime < 1) throw std::domain_error("verify_hmono: need at least one draw per regime");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> p_dist(0.05, 0.95);
  std::uniform_real_distribution<double> ab_dist(-3.0, 3.0);

  struct Draw {
    int regime;
    double p, a, b;
  };
  // Regimes 0 and 2 make h non-increasing, 1 and 3 non-decreasing.
  auto in_regime = [](int regime, double p, double a, double b) {
    switch (regime) {
      case 0: return a >= 0.0 && b <= 0.0;
      case 1: return a <= 0.0 && b >= 0.0;
      case 2: return a - p * (a + b) > 0.0;
      default: return a - p * (a + b) < 0.0;
    }
  };
  std::vector<Draw> draws;
  for (int regime = 0; regime < 4; ++regime) {
    for (int k = 0; k < draws_per_regime;) {
      const double p = p_dist(rng);
      const double a = ab_dist(rng);
      const double b = ab_dist(rng);
      if (!in_regime(regime, p, a, b)) continue;
      draws.push_back({regime, p, a, b});
      ++k;
    }
  }
  static const char* names[] = {"a>=0>=b", "a<=0<=b", "a-p(a+b)>0", "a-p(a+b)<0"};
  auto parts = parallel_map<Tally>(draws.size(), [&](std::size_t idx) {
    Tally t;
    const Draw& d = draws[idx];
    const ReflectionMap map(d.p);
    const WeightFunction w(d.a, d.b);
    const bool decreasing = d.regime == 0 || d.regime == 2;
    double prev = density_ratio(map, w, 0.01);
    for (int i = 2; i <= 99; ++i) {
      const double x = i / 100.0;
      const double h = density_ratio(map, w, x);
      const double diff = h - prev;
      t.check(names[d.regime], {param("p", d.p), param("a", d.a), param("b", d.b), param("x", x)}, h, prev,
              decreasing ? -diff : diff, kHmonoTol * (1.0 + std::fabs(prev)));
      prev = h;
    }
    return t;
  });
  std::ostringstream grid;
  grid << draws_per_regime << " draws per regime, p in (0.05,0.95), a,b in [-3,3], x=0.01..0.99 step 0.01";
  return merge_all(std::move(parts)).finish("hmono", grid.str(), seed);
}

VerificationReport verify_odds_identity() {
  const double ps[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  const Weight weights[] = {{0, 0}, {1, 0}, {0, 1}, {2, 1}, {-0.5, 1.5}, {1.5, -0.5}, {0.5, 0.5}};
  const double powers[] = {0, 1, 5, 20};
  struct Case {
    double p;
    Weight w;
    double fpow;
  };
  std::vector<Case> cases;
  for (double p : ps) {
    for (const auto& w : weights) {
      for (double f : powers) {
        if (p * f + w.a <= -1.0 || (1.0 - p) * f + w.b <= -1.0) continue;
        cases.push_back({p, w, f});
      }
    }
  }
  auto parts = parallel_map<Tally>(cases.size(), [&](std::size_t idx) {
    Tally t;
    const Case& c = cases[idx];
    const ReflectionMap map(c.p);
    const WeightFunction w(c.w.a, c.w.b);
    std::vector<Param> ps_{param("p", c.p), param("a", c.w.a), param("b", c.w.b), param("fpow", c.fpow)};
    const OddsPair first = odds_functional(map, w, c.fpow);
    t.check("odds", ps_, first.lhs, first.rhs, kOddsTol * (1.0 + std::fabs(first.lhs)) - std::fabs(first.lhs - first.rhs));
    const OddsPair mirror = odds_functional_mirrored(map, w, c.fpow);
    t.check("odds_mirrored", ps_, mirror.lhs, mirror.rhs,
            kOddsTol * (1.0 + std::fabs(mirror.lhs)) - std::fabs(mirror.lhs - mirror.rhs));
    return t;
  });
  std::ostringstream grid;
  grid << cases.size() << " cases: p in {0.1,0.3,0.5,0.7,0.9}, 7 weights, fpow in {0,1,5,20}";
  return merge_all(std::move(parts)).finish("odds", grid.str());
}

}  // namespace tailbound
