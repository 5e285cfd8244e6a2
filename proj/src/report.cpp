#include "tailbound/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <tuple>

namespace tailbound {

Param param(std::string name, std::int64_t v) { return {std::move(name), std::to_string(v), static_cast<double>(v)}; }

Param param(std::string name, double v) { return {std::move(name), format_double(v), v}; }

Param param(std::string name, const BigRational& v) { return {std::move(name), v.to_string(), v.to_double()}; }

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void Tally::check(const std::string& name, std::vector<Param> params, double lhs, double rhs, double slack,
                  double tolerance) {
  ++cases_;
  if (std::isnan(slack)) slack = -std::numeric_limits<double>::infinity();
  worst_ = std::min(worst_, slack);
  if (slack < -tolerance) violations_.push_back(Violation{name, std::move(params), lhs, rhs, slack, {}, {}});
}

void Tally::check_exact_ge(const std::string& name, std::vector<Param> params, const BigRational& lhs,
                           const BigRational& rhs) {
  ++cases_;
  const BigRational diff = lhs - rhs;
  const double slack = diff.to_double();
  worst_ = std::min(worst_, slack);
  if (diff.sign() < 0) {
    violations_.push_back(
        Violation{name, std::move(params), lhs.to_double(), rhs.to_double(), slack, lhs.to_string(), rhs.to_string()});
  }
}

void Tally::check_strict(const std::string& name, std::vector<Param> params, double lhs, double rhs,
                         double slack) {
  ++cases_;
  if (std::isnan(slack)) slack = -std::numeric_limits<double>::infinity();
  worst_ = std::min(worst_, slack);
  if (!(slack > 0.0)) violations_.push_back(Violation{name, std::move(params), lhs, rhs, slack, {}, {}});
}

void Tally::check_exact_gt(const std::string& name, std::vector<Param> params, const BigRational& lhs,
                           const BigRational& rhs) {
  ++cases_;
  const BigRational diff = lhs - rhs;
  const double slack = diff.to_double();
  worst_ = std::min(worst_, slack);
  if (diff.sign() <= 0) {
    violations_.push_back(
        Violation{name, std::move(params), lhs.to_double(), rhs.to_double(), slack, lhs.to_string(), rhs.to_string()});
  }
}

void Tally::check_exact_eq(const std::string& name, std::vector<Param> params, const BigRational& lhs,
                           const BigRational& rhs) {
  ++cases_;
  const BigRational diff = (lhs - rhs).abs();
  const double slack = diff.is_zero() ? 0.0 : -diff.to_double();
  worst_ = std::min(worst_, slack);
  if (!diff.is_zero()) {
    violations_.push_back(
        Violation{name, std::move(params), lhs.to_double(), rhs.to_double(), slack, lhs.to_string(), rhs.to_string()});
  }
}

void Tally::merge(Tally&& other) {
  cases_ += other.cases_;
  worst_ = std::min(worst_, other.worst_);
  std::move(other.violations_.begin(), other.violations_.end(), std::back_inserter(violations_));
  std::move(other.notes_.begin(), other.notes_.end(), std::back_inserter(notes_));
}

namespace {

bool violation_less(const Violation& a, const Violation& b) {
  if (a.check != b.check) return a.check < b.check;
  const std::size_t n = std::min(a.params.size(), b.params.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.params[i].numeric != b.params[i].numeric) return a.params[i].numeric < b.params[i].numeric;
    if (a.params[i].text != b.params[i].text) return a.params[i].text < b.params[i].text;
  }
  return a.params.size() < b.params.size();
}

}  // namespace

VerificationReport Tally::finish(std::string suite, std::string grid, std::optional<std::uint64_t> seed) && {
  VerificationReport r;
  r.suite = std::move(suite);
  r.cases_run = cases_;
  r.violations = std::move(violations_);
  std::stable_sort(r.violations.begin(), r.violations.end(), violation_less);
  r.worst_slack = worst_;
  r.passed = r.violations.empty();
  r.seed = seed;
  r.grid = std::move(grid);
  r.notes = std::move(notes_);
  return r;
}

VerificationReport merge_reports(std::string suite, const std::vector<VerificationReport>& parts) {
  VerificationReport r;
  r.suite = std::move(suite);
  std::string grid;
  for (const auto& part : parts) {
    r.cases_run += part.cases_run;
    r.worst_slack = std::min(r.worst_slack, part.worst_slack);
    for (auto v : part.violations) {
      v.check = part.suite + "/" + v.check;
      r.violations.push_back(std::move(v));
    }
    for (const auto& note : part.notes) r.notes.push_back(part.suite + ": " + note);
    if (!grid.empty()) grid += "; ";
    grid += part.suite + ": " + part.grid;
    if (part.seed && !r.seed) r.seed = part.seed;
  }
  r.grid = grid;
  r.passed = r.violations.empty();
  return r;
}

nlohmann::json to_json(const Param& p) { return nlohmann::json{{"name", p.name}, {"value", p.text}}; }

nlohmann::json to_json(const Violation& v) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& p : v.params) params[p.name] = p.text;
  nlohmann::json j{{"check", v.check},
                   {"params", params},
                   {"lhs", v.lhs},
                   {"rhs", v.rhs},
                   {"slack", v.slack}};
  if (v.lhs_exact) j["lhs_exact"] = *v.lhs_exact;
  if (v.rhs_exact) j["rhs_exact"] = *v.rhs_exact;
  return j;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) violations.push_back(to_json(v));
  nlohmann::json j{{"suite", r.suite},
                   {"cases_run", r.cases_run},
                   {"violations", violations},
                   {"passed", r.passed},
                   {"grid", r.grid},
                   {"notes", r.notes}};
  // JSON has no infinity; an empty suite reports null.
  j["worst_slack"] = std::isfinite(r.worst_slack) ? nlohmann::json(r.worst_slack) : nlohmann::json(nullptr);
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
  return j;
}

}  // namespace tailbound
