#pragma once

#include <algorithm>
#include <string>

#include <json.hpp>

namespace pa {

using json = nlohmann::ordered_json;

/// Outcome of one verification: {check, params, status, details, max_residual}.
struct Report {
  std::string check;
  json params = json::object();
  bool pass = true;
  json details = json::object();
  double max_residual = 0.0;

  void residual(double r) { max_residual = std::max(max_residual, r); }
  /// Records a named sub-check; a false result fails the whole report.
  void expect(const std::string& name, bool ok) {
    details["checks"][name] = ok;
    pass = pass && ok;
  }
  json to_json() const;
};

inline json Report::to_json() const {
  json j;
  j["check"] = check;
  j["params"] = params;
  j["status"] = pass ? "pass" : "fail";
  j["details"] = details;
  j["max_residual"] = max_residual;
  return j;
}

}  // namespace pa
