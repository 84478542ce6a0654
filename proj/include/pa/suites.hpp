#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pa/report.hpp"
#include "pa/scalar.hpp"

namespace pa {

struct SuiteConfig {
  /// Unset means each suite picks its own ring (symbolic, or δ ∈ {2, 5/2}
  /// for the numeric suites).
  std::optional<Ring> ring;
  int level = 2;          // k runs over 0..level
  int max_colour = -1;    // per-k default k+3
  uint64_t seed = 42;
  int jobs = 1;
  int instances = 200;    // randomized instances per clause

  int colour_cap(int k) const { return max_colour < 0 ? k + 3 : max_colour; }
  json to_json() const;
};

struct SuiteResult {
  std::string suite;
  std::vector<Report> reports;  // sorted by check, then params
  bool pass() const;
  json to_json(const SuiteConfig& cfg) const;
};

using Task = std::function<Report()>;

const std::vector<std::string>& suite_names();
/// The tasks of one suite (or of every suite for "all").
std::vector<Task> suite_tasks(const std::string& name, const SuiteConfig& cfg);
/// Runs tasks on `jobs` threads; output order matches input order.
std::vector<Report> run_tasks(const std::vector<Task>& tasks, int jobs);
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace pa
