#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tailbound/report.hpp"
#include "tailbound/special.hpp"
#include "tailbound/verify.hpp"

namespace tailbound {

namespace {

constexpr double kDominanceTol = 1e-10;
constexpr double kMonotoneTol = 1e-11;
constexpr double kEndpointC = 2.0;

}  // namespace

VerificationReport verify_conditional_dominance(double a, double b, double c, double d,
                                                const std::vector<double>& grid) {
  if (!(a > 0.0) || !(b > 0.0) || !(c >= a) || !(d >= b)) {
    throw std::domain_error("verify_conditional_dominance: need c >= a > 0 and d >= b > 0");
  }
  if (!(c + d > a + b)) throw std::domain_error("verify_conditional_dominance: c+d must exceed a+b");
  const double p = (c - a) / ((c + d) - (a + b));
  const BetaParams v(a, b);
  const BetaParams w(c, d);
  std::vector<double> xs;
  for (double x : grid) {
    if (x > 0.0 && x < 1.0) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  Tally t;
  for (double s : xs) {
    for (double x : xs) {
      std::vector<Param> ps{param("a", a), param("b", b), param("c", c), param("d", d), param("s", s),
                            param("t", x)};
      if (x <= s && s <= p) {
        const double cv = regularized_incomplete_beta(v, x) / regularized_incomplete_beta(v, s);
        const double cw = regularized_incomplete_beta(w, x) / regularized_incomplete_beta(w, s);
        t.check("below", ps, cw, cv, cv - cw, kDominanceTol);
      }
      if (p <= s && s <= x) {
        const double cv = incomplete_beta_complement(v, x) / incomplete_beta_complement(v, s);
        const double cw = incomplete_beta_complement(w, x) / incomplete_beta_complement(w, s);
        t.check("above", ps, cw, cv, cv - cw, kDominanceTol);
      }
    }
  }
  std::ostringstream grid_text;
  grid_text << "V=Beta(" << a << "," << b << "), W=Beta(" << c << "," << d << "), p=" << format_double(p) << ", "
            << xs.size() << " grid points";
  return std::move(t).finish("powerdist", grid_text.str());
}

VerificationReport verify_conditional_dominance_suite() {
  struct Shapes {
    double a, b, c, d;
  };
  const Shapes cases[] = {{1, 1, 2, 2},     {1, 1, 3, 2},   {2, 3, 5, 4},   {0.5, 0.5, 3, 1},
                          {1, 2, 4, 6},     {2, 2, 10, 10}, {0.7, 1.3, 1.7, 4}, {3, 1, 3.5, 8},
                          {1.5, 0.5, 20, 5}};
  std::vector<double> grid;
  for (int i = 1; i < 50; ++i) grid.push_back(i / 50.0);
  std::vector<VerificationReport> parts;
  for (const auto& s : cases) {
    std::vector<double> g = grid;
    g.push_back((s.c - s.a) / ((s.c + s.d) - (s.a + s.b)));
    parts.push_back(verify_conditional_dominance(s.a, s.b, s.c, s.d, g));
  }
  return merge_reports("powerdist", parts);
}

std::string to_string(BetamonoBranch branch) {
  switch (branch) {
    case BetamonoBranch::low_simple: return "p<=1/2, a>=1>=b";
    case BetamonoBranch::low_product: return "p<=1/2, (a+b-2)((a-1)/(a+b-2)-p)>0";
    case BetamonoBranch::high_simple: return "p>=1/2, b>=1>=a";
    case BetamonoBranch::high_product: return "p>=1/2, (a+b-2)((a-1)/(a+b-2)-p)<0";
    case BetamonoBranch::none: return "none";
    case BetamonoBranch::boundary: return "boundary a+b=2, a!=1";
  }
  return "none";
}

BetamonoVerdict check_betamono_conditions(double p, double a, double b) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("check_betamono_conditions: p must lie in (0,1)");
  auto verdict = [](BetamonoBranch br) {
    const bool holds = br != BetamonoBranch::none && br != BetamonoBranch::boundary;
    return BetamonoVerdict{br, holds, to_string(br)};
  };
  if (p <= 0.5 && a >= 1.0 && 1.0 >= b) return verdict(BetamonoBranch::low_simple);
  if (p >= 0.5 && b >= 1.0 && 1.0 >= a) return verdict(BetamonoBranch::high_simple);
  const double s = a + b - 2.0;
  if (s == 0.0) return verdict(a == 1.0 ? BetamonoBranch::none : BetamonoBranch::boundary);
  const double product = s * ((a - 1.0) / s - p);
  if (p <= 0.5 && product > 0.0) return verdict(BetamonoBranch::low_product);
  if (p >= 0.5 && product < 0.0) return verdict(BetamonoBranch::high_product);
  return verdict(BetamonoBranch::none);
}

double SweepConfig::n_min() const { return std::max(-a / p, -b / (1.0 - p)); }

void SweepConfig::validate() const {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("SweepConfig: p must lie in (0,1)");
  if (n_grid.empty()) throw std::domain_error("SweepConfig: empty n grid");
  for (double n : n_grid) {
    if (!(p * n + a > 0.0) || !((1.0 - p) * n + b > 0.0)) {
      throw std::domain_error("SweepConfig: n=" + format_double(n) + " gives a non-positive shape");
    }
  }
  if (!std::is_sorted(n_grid.begin(), n_grid.end())) throw std::domain_error("SweepConfig: n grid must be sorted");
}

SweepConfig SweepConfig::with_default_grid(double p, double a, double b, double n_max, int points) {
  SweepConfig cfg{p, a, b, {}};
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("SweepConfig: p must lie in (0,1)");
  const double lo = cfg.n_min();
  const double start = std::max(lo, 0.25);
  if (!(n_max > start) || points < 2) throw std::domain_error("SweepConfig: empty default grid");
  std::vector<double> grid;
  const double ratio = std::log(n_max / start);
  for (int i = 0; i < points; ++i) {
    grid.push_back(i + 1 == points ? n_max : start * std::exp(ratio * i / (points - 1)));
  }
  for (int i = 0; i <= 20; ++i) grid.push_back(i);
  grid.erase(std::remove_if(grid.begin(), grid.end(), [&](double n) { return !(n > lo); }), grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  cfg.n_grid = std::move(grid);
  return cfg;
}

SweepResult sweep_beta_monotone(const SweepConfig& cfg, bool conjecture_mode) {
  cfg.validate();
  const BetamonoVerdict verdict = check_betamono_conditions(cfg.p, cfg.a, cfg.b);
  if (!conjecture_mode && !verdict.holds) {
    throw std::invalid_argument("sweep_beta_monotone: conditions do not hold (" + verdict.description +
                                "); use conjecture mode");
  }
  SweepResult out;
  for (double n : cfg.n_grid) {
    const BetaParams shapes(cfg.p * n + cfg.a, (1.0 - cfg.p) * n + cfg.b);
    out.series.push_back({n, regularized_incomplete_beta(shapes, cfg.p)});
  }
  const double first = out.series.front().value;
  const double last = out.series.back().value;
  out.direction = last - first > kMonotoneTol ? 1 : (first - last > kMonotoneTol ? -1 : 0);

  Tally t;
  for (std::size_t i = 1; i < out.series.size(); ++i) {
    const double diff = out.series[i].value - out.series[i - 1].value;
    const double slack = out.direction > 0 ? diff : (out.direction < 0 ? -diff : -std::fabs(diff));
    t.check("monotone", {param("n_prev", out.series[i - 1].n), param("n", out.series[i].n)}, out.series[i].value,
            out.series[i - 1].value, slack, kMonotoneTol);
  }
  const double n_last = out.series.back().n;
  const double allowed = kEndpointC / std::sqrt(n_last);
  t.check("endpoint_near_half", {param("n", n_last)}, last, 0.5, allowed - std::fabs(last - 0.5));

  std::ostringstream grid;
  grid << "p=" << format_double(cfg.p) << ", a=" << format_double(cfg.a) << ", b=" << format_double(cfg.b) << ", "
       << cfg.n_grid.size() << " n values in [" << format_double(cfg.n_grid.front()) << ", "
       << format_double(n_last) << "]";
  out.report = std::move(t).finish("sweep-beta", grid.str());
  out.monotone_observed = std::none_of(out.report.violations.begin(), out.report.violations.end(),
                                       [](const Violation& v) { return v.check == "monotone"; });
  out.report.notes.push_back("conditions: " + verdict.description);
  if (conjecture_mode) {
    out.report.notes.push_back(std::string("conjecture mode, monotone_observed=") +
                               (out.monotone_observed ? "true" : "false") + ", " +
                               std::to_string(out.report.violations.size()) + " cases would have failed");
    out.report.violations.clear();
    out.report.passed = true;
  }
  return out;
}

}  // namespace tailbound
