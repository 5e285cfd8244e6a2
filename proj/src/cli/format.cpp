#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "commands.hpp"

namespace tailbound::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string RunConfig::line() const {
  std::string out = "tailbound " + subcommand_;
  for (const auto& [k, v] : bindings_) out += " " + k + "=" + v;
  return out;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  j["subcommand"] = subcommand_;
  for (const auto& [k, v] : bindings_) j[k] = v;
  return j;
}

std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

Table::Cell number_cell(double v, int precision) { return {format_number(v, precision), std::isfinite(v), v}; }
Table::Cell text_cell(std::string s) { return {std::move(s), false}; }
Table::Cell empty_cell() { return {std::nullopt, false}; }

void write_csv(std::ostream& os, const RunConfig& cfg, const Table& t) {
  os << "# " << cfg.line() << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ",";
      if (row[i].text) os << csv_field(*row[i].text);
    }
    os << "\n";
  }
}

nlohmann::json table_json(const RunConfig& cfg, const Table& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json r = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      const auto& c = row[i];
      if (!c.text) {
        r[t.columns[i]] = nullptr;
      } else if (c.numeric) {
        r[t.columns[i]] = c.number;
      } else {
        r[t.columns[i]] = *c.text;
      }
    }
    rows.push_back(std::move(r));
  }
  return nlohmann::json{{"config", cfg.to_json()}, {"rows", rows}};
}

void write_json(std::ostream& os, const nlohmann::json& j) { os << j.dump(2) << "\n"; }

Sink::Sink(const std::optional<std::string>& path, std::ostream& fallback) : os_(&fallback) {
  if (!path) return;
  auto f = std::make_unique<std::ofstream>(*path, std::ios::binary);
  if (!*f) throw std::runtime_error("cannot open " + *path + " for writing");
  os_ = f.get();
  file_ = std::move(f);
}

std::string resolve_format(const GlobalOptions& g, const std::string& fallback,
                           const std::vector<std::string>& allowed) {
  const std::string f = g.format.empty() ? fallback : g.format;
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    std::string list;
    for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
    throw UsageError("--format " + f + " is not supported here (use " + list + ")");
  }
  return f;
}

}  // namespace tailbound::cli
