#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tailbound/verify.hpp"

namespace tailbound {

nlohmann::json to_json(const Param& p);
nlohmann::json to_json(const Violation& v);
nlohmann::json to_json(const VerificationReport& r);

/// Shortest round-trip rendering of a double.
std::string format_double(double v);

}  // namespace tailbound
