#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace tailbound::cli {

/// Bad arguments that CLI11 cannot catch on its own; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::optional<std::string> out;
  std::string format;  // empty: the subcommand's default
  int precision = 10;
};

/// Resolved parameters, echoed into every output.
class RunConfig {
 public:
  explicit RunConfig(std::string subcommand) : subcommand_(std::move(subcommand)) {}

  void bind(std::string key, std::string value) { bindings_.emplace_back(std::move(key), std::move(value)); }

  const std::string& subcommand() const { return subcommand_; }
  /// "tailbound <sub> key=value ..."
  std::string line() const;
  nlohmann::json to_json() const;

 private:
  std::string subcommand_;
  std::vector<std::pair<std::string, std::string>> bindings_;
};

/// Rows of pre-rendered cells. Cells that hold numbers are written bare in
/// JSON; std::nullopt is an empty CSV field and a JSON null.
struct Table {
  struct Cell {
    std::optional<std::string> text;
    bool numeric = false;
    double number = 0.0;
  };
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

Table::Cell number_cell(double v, int precision);
Table::Cell text_cell(std::string s);
Table::Cell empty_cell();

/// %.{precision}g, with "inf"/"nan" spelled out.
std::string format_number(double v, int precision);

void write_csv(std::ostream& os, const RunConfig& cfg, const Table& t);
nlohmann::json table_json(const RunConfig& cfg, const Table& t);
/// Pretty JSON with a trailing newline.
void write_json(std::ostream& os, const nlohmann::json& j);

/// Opens --out when given, else hands back `fallback`.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback);
  std::ostream& stream() { return *os_; }

 private:
  std::unique_ptr<std::ostream> file_;
  std::ostream* os_;
};

/// What a parsed subcommand runs.
using Action = std::function<int(const GlobalOptions&, std::ostream& out, std::ostream& err)>;

void register_bound(CLI::App& app, Action& action);
void register_figure(CLI::App& app, Action& action);
void register_verify(CLI::App& app, Action& action);
void register_reflect(CLI::App& app, Action& action);
void register_sweep(CLI::App& app, Action& action);

/// The format to use, checked against what the subcommand supports.
std::string resolve_format(const GlobalOptions& g, const std::string& fallback,
                           const std::vector<std::string>& allowed);

}  // namespace tailbound::cli
