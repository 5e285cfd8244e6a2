#include <algorithm>

#include "commands.hpp"
#include "tailbound/bounds.hpp"
#include "tailbound/exact.hpp"
#include "tailbound/special.hpp"

namespace tailbound::cli {

namespace {

struct FigureArgs {
  int figure = 1;
  std::int64_t n = 5;
  std::int64_t l = 0;
  std::string grid_step = "0.01";
};

// One sample of the curve. At integers the threshold ceil(x + l) jumps, so a
// "left" row (the value at x, which is also the limit from the left) is
// followed by a "right" row holding the limit from the right.
struct Sample {
  BigRational x;
  double probability;
  std::optional<BigRational> exact;
  std::string limit;
};

std::vector<BigRational> grid(const BigRational& end, const BigRational& step) {
  std::vector<BigRational> xs;
  for (BigRational x; x <= end; x += step) xs.push_back(x);
  // The last integer is always sampled, whatever the step.
  if (xs.back() != end) xs.push_back(end);
  // So is every integer in between.
  for (std::int64_t k = 1; BigRational(k) < end; ++k) xs.push_back(BigRational(k));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<Sample> binomial_samples(const FigureArgs& a, const BigRational& step) {
  std::vector<Sample> out;
  const std::int64_t n = a.n;
  for (const BigRational& mu : grid(BigRational(n), step)) {
    const BinomialSpec spec(n, mu);
    if (!mu.is_integer()) {
      const BigRational p = exact_shift_upper_tail(n, mu, a.l);
      out.push_back({mu, p.to_double(), p, ""});
      continue;
    }
    const std::int64_t k = mu.floor().get_si() + a.l;
    const BigRational at = binom_upper_tail(spec, k);
    out.push_back({mu, at.to_double(), at, "left"});
    // At mu = n there is nothing to the right.
    if (mu < BigRational(n)) {
      const BigRational right = binom_upper_tail(spec, k + 1);
      out.push_back({mu, right.to_double(), right, "right"});
    }
  }
  return out;
}

double poisson_tail(const BigRational& lambda, std::int64_t k) {
  if (lambda.is_zero()) return k <= 0 ? 1.0 : 0.0;
  return poisson_upper_tail(PoissonSpec(lambda.to_double()), k);
}

std::vector<Sample> poisson_samples(const FigureArgs& a, const BigRational& step) {
  std::vector<Sample> out;
  for (const BigRational& lambda : grid(BigRational(a.n), step)) {
    if (!lambda.is_integer()) {
      const std::int64_t k = (lambda + BigRational(a.l)).ceil().get_si();
      out.push_back({lambda, poisson_tail(lambda, k), std::nullopt, ""});
      continue;
    }
    const std::int64_t k = lambda.floor().get_si() + a.l;
    out.push_back({lambda, poisson_tail(lambda, k), std::nullopt, "left"});
    out.push_back({lambda, poisson_tail(lambda, k + 1), std::nullopt, "right"});
  }
  return out;
}

}  // namespace

void register_figure(CLI::App& app, Action& action) {
  auto* sub = app.add_subcommand("figure", "Curve data for the binomial (1) or Poisson (2) tail figure");
  auto args = std::make_shared<FigureArgs>();
  sub->add_option("--figure", args->figure, "1: binomial, 2: Poisson")->capture_default_str();
  sub->add_option("--n", args->n, "Trials (figure 1) or largest lambda (figure 2)")->capture_default_str();
  sub->add_option("--l", args->l, "Shift above the mean")->capture_default_str();
  sub->add_option("--grid-step", args->grid_step, "Step in mu or lambda, read exactly")->capture_default_str();
  sub->callback([&action, args] {
    action = [args](const GlobalOptions& g, std::ostream& out, std::ostream&) {
      const FigureArgs& a = *args;
      if (a.figure != 1 && a.figure != 2) throw UsageError("--figure must be 1 or 2");
      if (a.n < 1) throw UsageError("--n must be positive");
      if (a.l < 0) throw UsageError("--l must be non-negative");
      const BigRational step = BigRational::parse(a.grid_step);
      if (step.sign() <= 0) throw UsageError("--grid-step must be positive");
      const std::string fmt = resolve_format(g, "csv", {"csv", "json"});

      RunConfig cfg("figure");
      cfg.bind("figure", std::to_string(a.figure));
      cfg.bind("n", std::to_string(a.n));
      cfg.bind("l", std::to_string(a.l));
      cfg.bind("grid_step", step.to_string());
      cfg.bind("precision", std::to_string(g.precision));

      const std::vector<Sample> samples = a.figure == 1 ? binomial_samples(a, step) : poisson_samples(a, step);
      // The dashed lines: the parameter-free floor for figure 1, the value at
      // lambda = 1 for figure 2.
      const double bound = a.figure == 1 ? BigRational(1, a.l + 2).pow(static_cast<unsigned>(a.l + 2)).to_double()
                                         : poisson_sharp_lower(a.l).value;
      Table t;
      t.columns = {"x", "probability", "lower_bound", "probability_exact", "limit"};
      for (const auto& s : samples) {
        t.rows.push_back({number_cell(s.x.to_double(), g.precision), number_cell(s.probability, g.precision),
                          number_cell(bound, g.precision),
                          s.exact ? text_cell(s.exact->to_string()) : empty_cell(),
                          s.limit.empty() ? empty_cell() : text_cell(s.limit)});
      }
      Sink sink(g.out, out);
      if (fmt == "csv") {
        write_csv(sink.stream(), cfg, t);
      } else {
        write_json(sink.stream(), table_json(cfg, t));
      }
      return 0;
    };
  });
}

}  // namespace tailbound::cli
