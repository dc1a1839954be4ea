#pragma once

#include "credal/json_io.hpp"
#include "credal/random_models.hpp"

#include <string>
#include <vector>

namespace credal {

struct BatteryResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  Json first_counterexample;  // null when there is none
  Json stats = Json::object();
  double seconds = 0.0;
  bool ok() const { return failures == 0; }
};

struct SuiteReport {
  std::vector<BatteryResult> batteries;
  double seconds = 0.0;
  bool ok() const;
  /// With `with_runtime` false the runtime fields are left out, so equal
  /// configs give byte-identical dumps.
  Json to_json(bool with_runtime = true) const;
  std::string to_text() const;
};

/// linear_events, credal_events, complementation, precise_collapse, mixing,
/// coherence, variable_level, marginal_mixing, lp_backend, lp_properties.
const std::vector<std::string>& battery_names();

/// Throws ConfigError for unknown names.
BatteryResult run_battery(const std::string& name, const SuiteConfig& config);

/// Validates the config, then runs the selected batteries in order.
SuiteReport run_verify_suite(const SuiteConfig& config);

}  // namespace credal
