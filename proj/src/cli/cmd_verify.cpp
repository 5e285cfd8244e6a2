#include <cmath>
#include <filesystem>
#include <fstream>

#include "commands.hpp"
#include "tailbound/report.hpp"
#include "tailbound/verify.hpp"

namespace tailbound::cli {

namespace {

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::int64_t> max_n;
  std::optional<std::int64_t> max_l;
  std::optional<std::uint64_t> seed;
  std::int64_t trials = 1000;
  std::optional<double> p;
  std::optional<double> a;
  std::optional<double> b;
  std::string grid_step = "0.1";
  bool conjecture = false;
};

// The sweeps run by the betamono suite, plus the symmetric control.
struct SweepCase {
  double p, a, b;
};
constexpr SweepCase kBetamonoCases[] = {{0.3, 1, 1}, {0.3, 2, 0.5}, {0.3, 3, 3}, {0.7, 1, 1}, {0.7, 0.5, 2}};

constexpr double kSymmetricTol = 1e-13;

VerificationReport betamono_suite() {
  std::vector<VerificationReport> parts;
  for (const auto& c : kBetamonoCases) {
    SweepResult r = sweep_beta_monotone(SweepConfig::with_default_grid(c.p, c.a, c.b), false);
    r.report.suite = "p=" + format_double(c.p) + ",a=" + format_double(c.a) + ",b=" + format_double(c.b);
    parts.push_back(std::move(r.report));
  }
  const SweepResult sym = sweep_beta_monotone(SweepConfig::with_default_grid(0.5, 1, 1), false);
  Tally t;
  for (const auto& pt : sym.series) {
    t.check("constant_half", {param("n", pt.n)}, pt.value, 0.5, -std::fabs(pt.value - 0.5), kSymmetricTol);
  }
  parts.push_back(std::move(t).finish("symmetric", "p=1/2, a=b=1, default grid"));
  return merge_reports("betamono", parts);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lattice", "theorem5",  "theorem1", "corollary2", "poisson",
                                                 "sandwich", "uniform-beta", "bounds", "bridge", "powerdist",
                                                 "betamono", "sweep-beta", "reflection", "hmono", "odds",
                                                 "all"};
  return names;
}

// Suites in `all`; "bounds" and "sweep-beta" overlap with these.
const std::vector<std::string>& all_members() {
  static const std::vector<std::string> names = {"lattice",  "theorem5",  "theorem1",   "corollary2", "poisson",
                                                 "sandwich", "uniform-beta", "bridge", "powerdist", "betamono",
                                                 "reflection", "hmono", "odds"};
  return names;
}

VerificationReport run_suite(const std::string& name, const VerifyArgs& a) {
  auto n_or = [&](std::int64_t d) { return a.max_n.value_or(d); };
  auto l_or = [&](std::int64_t d) { return a.max_l.value_or(d); };
  const std::uint64_t seed = a.seed.value_or(42);
  const BigRational step = BigRational::parse(a.grid_step);
  if (name == "lattice") return verify_hoeffding_lattice(n_or(60), a.max_l.value_or(-1));
  if (name == "theorem5") return verify_hoeffding_theorem5(a.trials, n_or(12), seed);
  if (name == "theorem1") return verify_theorem1_chain(n_or(60), l_or(4));
  if (name == "corollary2") return verify_corollary2(n_or(40), l_or(3), step);
  if (name == "poisson") return verify_poisson_chain(n_or(40), l_or(4));
  if (name == "sandwich") return verify_beta_sandwich(n_or(40), l_or(2), step);
  if (name == "uniform-beta") return verify_uniform_beta(n_or(40));
  if (name == "bounds") return verify_bound_suites(n_or(60), l_or(4));
  if (name == "bridge") return verify_beta_bridge(n_or(60), step);
  if (name == "powerdist") return verify_conditional_dominance_suite();
  if (name == "betamono") return betamono_suite();
  if (name == "reflection") return verify_reflection();
  if (name == "hmono") return verify_hmono(20, seed);
  if (name == "odds") return verify_odds_identity();
  throw UsageError("unknown suite " + name);
}

void write_series(const std::string& path, const RunConfig& cfg, const SweepResult& r, int precision) {
  Table t;
  t.columns = {"n", "probability"};
  for (const auto& pt : r.series) t.rows.push_back({number_cell(pt.n, precision), number_cell(pt.value, 17)});
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(f, cfg, t);
}

SweepConfig sweep_config(const VerifyArgs& a) {
  if (!a.p || !a.a || !a.b) throw UsageError("sweep-beta needs --p, --a and --b");
  return SweepConfig::with_default_grid(*a.p, *a.a, *a.b);
}

void bind_sweep(RunConfig& cfg, const VerifyArgs& a) {
  cfg.bind("p", format_double(*a.p));
  cfg.bind("a", format_double(*a.a));
  cfg.bind("b", format_double(*a.b));
  cfg.bind("conjecture", a.conjecture ? "true" : "false");
}

}  // namespace

void register_verify(CLI::App& app, Action& action) {
  auto* sub = app.add_subcommand("verify", "Run property suites and write a JSON report");
  auto args = std::make_shared<VerifyArgs>();
  sub->add_option("--suite", args->suite, "Suite name or all")
      ->check(CLI::IsMember(suite_names()))
      ->capture_default_str();
  sub->add_option("--max-n", args->max_n, "Largest n (or lambda) in the grid");
  sub->add_option("--max-l", args->max_l, "Largest shift l");
  sub->add_option("--seed", args->seed, "Seed for randomized suites (default 42)");
  sub->add_option("--trials", args->trials, "Random vectors for theorem5")->capture_default_str();
  sub->add_option("--p", args->p, "sweep-beta: p");
  sub->add_option("--a", args->a, "sweep-beta: a");
  sub->add_option("--b", args->b, "sweep-beta: b");
  sub->add_option("--grid-step", args->grid_step, "Step of rational mu grids")->capture_default_str();
  sub->add_flag("--conjecture", args->conjecture, "sweep-beta: do not require the sufficient conditions");
  sub->callback([&action, args] {
    action = [args](const GlobalOptions& g, std::ostream& out, std::ostream& err) {
      const VerifyArgs& a = *args;
      resolve_format(g, "json", {"json"});
      RunConfig cfg("verify");
      cfg.bind("suite", a.suite);
      if (a.max_n) cfg.bind("max_n", std::to_string(*a.max_n));
      if (a.max_l) cfg.bind("max_l", std::to_string(*a.max_l));
      cfg.bind("seed", std::to_string(a.seed.value_or(42)));
      cfg.bind("trials", std::to_string(a.trials));
      cfg.bind("grid_step", BigRational::parse(a.grid_step).to_string());

      std::vector<VerificationReport> reports;
      if (a.suite == "sweep-beta") {
        bind_sweep(cfg, a);
        const SweepResult r = sweep_beta_monotone(sweep_config(a), a.conjecture);
        const std::filesystem::path report_path = g.out.value_or("sweep-beta.json");
        const std::filesystem::path series = report_path.parent_path() / (report_path.stem().string() + "_series.csv");
        write_series(series.string(), cfg, r, g.precision);
        reports.push_back(r.report);
      } else if (a.suite == "all") {
        for (const auto& name : all_members()) reports.push_back(run_suite(name, a));
      } else {
        reports.push_back(run_suite(a.suite, a));
      }

      bool passed = true;
      nlohmann::json suites = nlohmann::json::array();
      for (const auto& r : reports) {
        passed = passed && r.passed;
        suites.push_back(to_json(r));
        err << (r.passed ? "PASS " : "FAIL ") << r.suite << ": " << r.cases_run << " cases, "
            << r.violations.size() << " violations, worst slack " << format_double(r.worst_slack) << "\n";
      }
      Sink sink(g.out, out);
      write_json(sink.stream(), nlohmann::json{{"config", cfg.to_json()}, {"passed", passed}, {"suites", suites}});
      return passed ? 0 : 1;
    };
  });
}

void register_sweep(CLI::App& app, Action& action) {
  auto* sub = app.add_subcommand("sweep-beta", "P(W_n <= p) over n for W_n ~ Beta(pn+a, (1-p)n+b)");
  auto args = std::make_shared<VerifyArgs>();
  auto n_max = std::make_shared<double>(1e4);
  auto points = std::make_shared<int>(200);
  sub->add_option("--p", args->p, "Mode parameter in (0,1)")->required();
  sub->add_option("--a", args->a, "Shape offset a")->required();
  sub->add_option("--b", args->b, "Shape offset b")->required();
  sub->add_option("--n-max", *n_max, "Largest n")->capture_default_str();
  sub->add_option("--points", *points, "Geometric grid points")->capture_default_str();
  sub->add_flag("--conjecture", args->conjecture, "Do not require the sufficient conditions");
  sub->callback([&action, args, n_max, points] {
    action = [args, n_max, points](const GlobalOptions& g, std::ostream& out, std::ostream& err) {
      const VerifyArgs& a = *args;
      const std::string fmt = resolve_format(g, "csv", {"csv", "json"});
      RunConfig cfg("sweep-beta");
      bind_sweep(cfg, a);
      cfg.bind("n_max", format_double(*n_max));
      cfg.bind("points", std::to_string(*points));
      const SweepResult r =
          sweep_beta_monotone(SweepConfig::with_default_grid(*a.p, *a.a, *a.b, *n_max, *points), a.conjecture);
      Table t;
      t.columns = {"n", "probability"};
      for (const auto& pt : r.series) t.rows.push_back({number_cell(pt.n, g.precision), number_cell(pt.value, 17)});
      Sink sink(g.out, out);
      if (fmt == "csv") {
        write_csv(sink.stream(), cfg, t);
      } else {
        nlohmann::json j = table_json(cfg, t);
        j["report"] = to_json(r.report);
        j["monotone_observed"] = r.monotone_observed;
        j["direction"] = r.direction;
        write_json(sink.stream(), j);
      }
      err << (r.report.passed ? "PASS" : "FAIL") << " sweep-beta: direction " << r.direction << ", monotone "
          << (r.monotone_observed ? "yes" : "no") << "\n";
      return r.report.passed ? 0 : 1;
    };
  });
}

}  // namespace tailbound::cli
