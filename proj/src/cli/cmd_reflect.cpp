#include <cmath>

#include "commands.hpp"
#include "tailbound/rational.hpp"
#include "tailbound/reflection.hpp"
#include "tailbound/report.hpp"

namespace tailbound::cli {

namespace {

struct ReflectArgs {
  double p = 0.5;
  std::optional<double> x;
  std::string grid_step = "0.01";
};

}  // namespace

void register_reflect(CLI::App& app, Action& action) {
  auto* sub = app.add_subcommand("reflect", "Tabulate r_p(x), its derivatives and the involution residual");
  auto args = std::make_shared<ReflectArgs>();
  sub->add_option("--p", args->p, "Fixed point in (0,1)")->required();
  sub->add_option("--x", args->x, "A single point in [0,1]");
  sub->add_option("--grid-step", args->grid_step, "Interior grid step when --x is absent")->capture_default_str();
  sub->callback([&action, args] {
    action = [args](const GlobalOptions& g, std::ostream& out, std::ostream&) {
      const ReflectArgs& a = *args;
      if (!(a.p > 0.0 && a.p < 1.0)) throw UsageError("--p must lie in (0,1)");
      const std::string fmt = resolve_format(g, "csv", {"csv", "json"});
      RunConfig cfg("reflect");
      cfg.bind("p", format_double(a.p));
      std::vector<double> xs;
      if (a.x) {
        if (!(*a.x >= 0.0 && *a.x <= 1.0)) throw UsageError("--x must lie in [0,1]");
        xs.push_back(*a.x);
        cfg.bind("x", format_double(*a.x));
      } else {
        const BigRational step = BigRational::parse(a.grid_step);
        if (step.sign() <= 0 || step >= BigRational(1)) throw UsageError("--grid-step must lie in (0,1)");
        for (BigRational x = step; x < BigRational(1); x += step) xs.push_back(x.to_double());
        cfg.bind("grid_step", step.to_string());
      }
      cfg.bind("precision", std::to_string(g.precision));

      const ReflectionMap map(a.p);
      Table t;
      t.columns = {"x", "r", "r_prime", "r_second", "involution_residual"};
      for (double x : xs) {
        const Point01 pt = Point01::from_value(x);
        const Reflection r = map.reflect(pt);
        const Reflection back = map.reflect(r.point());
        const double residual = x >= 0.5 ? std::fabs(back.complement - pt.complement) : std::fabs(back.value - x);
        const bool interior = x > 0.0 && x < 1.0;
        const bool at_fixed_point = std::fabs(map.offset_of(pt)) < 1e-8;
        t.rows.push_back({number_cell(x, g.precision), number_cell(r.value, g.precision),
                          interior ? number_cell(reflect_derivative(map, pt), g.precision) : empty_cell(),
                          interior && !at_fixed_point ? number_cell(reflect_second_derivative(map, pt), g.precision)
                                                      : empty_cell(),
                          number_cell(residual, 3)});
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
