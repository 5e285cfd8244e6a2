#include "tailbound/cli.hpp"

#include <algorithm>

#include "commands.hpp"

namespace tailbound::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tail bounds for binomial, Poisson and beta variables", "tailbound"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format: csv, json (and text for bound)")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--precision", g.precision, "Significant digits for decimal output")->check(CLI::Range(1, 17));

  Action action;
  register_bound(app, action);
  register_figure(app, action);
  register_verify(app, action);
  register_reflect(app, action);
  register_sweep(app, action);
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "tailbound: " << e.what() << "\n";
    return 2;
  }

  try {
    return action(g, out, err);
  } catch (const UsageError& e) {
    err << "tailbound: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "tailbound: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "tailbound: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "tailbound: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tailbound::cli
