#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "soliform/catalog.hpp"

namespace soliform {

/// Scenario/config validation failure; `path` names the offending field.
struct ValidationError : std::runtime_error {
  ValidationError(std::string p, const std::string& msg)
      : std::runtime_error(p + ": " + msg), path(std::move(p)) {}
  std::string path;
};

/// One verification run: a catalog geometry, a conformal field on its
/// ambient space, and the suites to execute.
struct Scenario {
  std::string geometry;
  int n = 2;
  Eigen::VectorXd a;
  double beta = 0.0;
  Eigen::MatrixXd B;
  Eigen::VectorXd gamma;
  bool field_given = false;  // false: use the entry's canonical field
  int samples = 100;
  std::uint64_t seed = 42;
  std::map<std::string, double> tolerance_overrides;
  std::vector<std::string> suites;
};

/// Known suite names in canonical order.
const std::vector<std::string>& suite_names();

/// Default tolerance for a suite.
double default_tolerance(const std::string& suite);

/// The identity a suite checks, as an ASCII string carried in reports.
std::string suite_identity(const std::string& suite);

Scenario scenario_from_json(const nlohmann::json& j);
Scenario parse_scenario_file(const std::string& path);

/// Canonical gamma-field scenario for a catalog entry.
Scenario demo_scenario(const std::string& geometry, int n);

enum class SuiteStatus { Pass, Fail, NotApplicable };

std::string to_string(SuiteStatus s);

struct SuiteResult {
  std::string suite;
  std::string identity;
  double max_residual = 0.0;
  double tolerance = 0.0;
  SuiteStatus status = SuiteStatus::Pass;
  nlohmann::json details;
};

struct Stats {
  double min = 0.0, max = 0.0, mean = 0.0;
  int count = 0;
};

struct Report {
  Scenario scenario;
  std::vector<SuiteResult> suites;
  Stats lambda_stats, psi_stats, C_stats;
  int points_requested = 0;
  int points_evaluated = 0;
  int point_errors = 0;
  bool all_pass = true;
};

Report run_scenario(const Scenario& s);

nlohmann::json report_to_json(const Report& r);
std::string report_json_string(const Report& r);
std::string report_csv_summary(const Report& r);

/// 0 when no requested suite failed, 1 otherwise. Validation errors are
/// exit code 2, handled by the caller.
int exit_code_for(const Report& r);

/// Stable catalog listing with declared constants.
nlohmann::json list_catalog();

}  // namespace soliform
