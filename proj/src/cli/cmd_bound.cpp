#include <cmath>

#include "commands.hpp"
#include "tailbound/bounds.hpp"
#include "tailbound/special.hpp"

namespace tailbound::cli {

namespace {

struct BoundArgs {
  std::string family;
  std::string mu = "1";
  std::int64_t l = 0;
  std::optional<std::int64_t> n;
};

struct Named {
  std::string name;
  BoundResult result;
  std::string kind;  // overrides the BoundKind label, e.g. "exact"
};

std::string kind_label(const Named& b) {
  if (!b.kind.empty()) return b.kind;
  return b.result.kind == BoundKind::lower ? "lower" : "upper";
}

BoundResult exact_value(const BigRational& v) {
  BoundResult r;
  r.value = v.to_double();
  r.exact = v;
  return r;
}

BoundResult float_value(double v) {
  BoundResult r;
  r.value = v;
  return r;
}

std::vector<Named> binomial_bounds(const BoundArgs& a) {
  const BigRational mu = BigRational::parse(a.mu);
  const ShiftQuery q(mu, a.l, a.n);
  std::vector<Named> out;
  out.push_back({"corollary_lower", binom_corollary_lower(q), ""});
  if (mu.is_integer() && mu.sign() > 0 && a.l >= 1) {
    const std::int64_t m = mu.floor().get_si();
    out.push_back({"sharp_lower", binom_sharp_lower(m, a.l), ""});
    out.push_back({"universal_lower", binom_universal_lower(a.l), ""});
    out.push_back({"half_upper", binom_half_upper(), ""});
  }
  if (a.n) {
    const std::int64_t n = *a.n;
    out.push_back({"tail", exact_value(exact_shift_upper_tail(n, mu, a.l)), "exact"});
    out.push_back({"lower_tail", exact_value(exact_shift_lower_tail(n, mu, a.l)), "exact"});
    out.push_back({"lower_tail_bound", binom_lower_tail_bound(q), ""});
    const BigRational k = mu + BigRational(a.l);
    if (k.sign() > 0 && k < BigRational(n)) {
      const BetaSandwich s = beta_interpolation(q);
      BoundResult lo = float_value(s.lower);
      BoundResult hi = float_value(s.upper);
      hi.kind = BoundKind::upper;
      out.push_back({"beta_lower", lo, ""});
      out.push_back({"beta_upper", hi, ""});
    }
    out.push_back({"uniform_beta_lower", uniform_beta_lower(q), ""});
  }
  return out;
}

std::vector<Named> poisson_bounds(const BoundArgs& a, const std::optional<std::string>& lambda) {
  if (a.l < 0) throw UsageError("--l must be non-negative");
  std::vector<Named> out;
  out.push_back({"sharp_lower", poisson_sharp_lower(a.l), ""});
  if (a.l >= 1) out.push_back({"lower_tail_bound", poisson_lower_tail_bound(a.l), ""});
  if (lambda) {
    const BigRational lam = BigRational::parse(*lambda);
    const PoissonSpec spec(lam.to_double());
    const std::int64_t up = (lam + BigRational(a.l)).ceil().get_si();
    out.push_back({"tail", float_value(poisson_upper_tail(spec, up)), "exact"});
    const std::int64_t down = (lam - BigRational(a.l)).floor().get_si();
    out.push_back({"lower_tail", float_value(poisson_lower_tail(spec, down)), "exact"});
  }
  return out;
}

Table bound_table(const std::vector<Named>& bounds, int precision) {
  Table t;
  t.columns = {"bound", "kind", "value", "exact", "valid", "attained_at", "universal_floor", "reason"};
  for (const auto& b : bounds) {
    const BoundResult& r = b.result;
    t.rows.push_back({text_cell(b.name), text_cell(kind_label(b)), number_cell(r.value, precision),
                      r.exact ? text_cell(r.exact->to_string()) : empty_cell(),
                      text_cell(r.valid ? "true" : "false"),
                      r.attained_at ? text_cell(*r.attained_at) : empty_cell(),
                      r.universal_floor ? text_cell(r.universal_floor->to_string()) : empty_cell(),
                      r.reason.empty() ? empty_cell() : text_cell(r.reason)});
  }
  return t;
}

void write_text(std::ostream& os, const std::vector<Named>& bounds, int precision) {
  for (const auto& b : bounds) {
    const BoundResult& r = b.result;
    os << b.name << " (" << kind_label(b) << "): ";
    if (r.exact) os << r.exact->to_string() << " = ";
    os << format_number(r.value, precision);
    if (!r.valid) os << "  valid=false (" << r.reason << ")";
    if (r.attained_at) os << "  attained at " << *r.attained_at;
    if (r.universal_floor) os << "  universal floor " << r.universal_floor->to_string();
    os << "\n";
  }
}

}  // namespace

void register_bound(CLI::App& app, Action& action) {
  auto* sub = app.add_subcommand("bound", "Evaluate closed-form tail bounds");
  auto args = std::make_shared<BoundArgs>();
  auto lambda = std::make_shared<std::optional<std::string>>();
  sub->add_option("family", args->family, "binom or poisson")->required()->check(CLI::IsMember({"binom", "poisson"}));
  sub->add_option("--mu", args->mu, "Binomial mean, e.g. 5/2 or 2.5")->capture_default_str();
  sub->add_option("--l", args->l, "Shift above (or below) the mean")->capture_default_str();
  sub->add_option("--n", args->n, "Number of trials; enables exact tails and beta bounds");
  sub->add_option("--lambda", *lambda, "Poisson mean; adds the exact tails");
  sub->callback([&action, args, lambda] {
    action = [args, lambda](const GlobalOptions& g, std::ostream& out, std::ostream&) {
      const std::string fmt = resolve_format(g, "text", {"text", "csv", "json"});
      const auto bounds = args->family == "binom" ? binomial_bounds(*args) : poisson_bounds(*args, *lambda);
      RunConfig cfg("bound");
      cfg.bind("family", args->family);
      if (args->family == "binom") cfg.bind("mu", BigRational::parse(args->mu).to_string());
      cfg.bind("l", std::to_string(args->l));
      if (args->n) cfg.bind("n", std::to_string(*args->n));
      if (*lambda) cfg.bind("lambda", BigRational::parse(**lambda).to_string());
      cfg.bind("precision", std::to_string(g.precision));
      Sink sink(g.out, out);
      if (fmt == "text") {
        write_text(sink.stream(), bounds, g.precision);
      } else if (fmt == "csv") {
        write_csv(sink.stream(), cfg, bound_table(bounds, g.precision));
      } else {
        write_json(sink.stream(), table_json(cfg, bound_table(bounds, g.precision)));
      }
      return 0;
    };
  });
}

}  // namespace tailbound::cli
