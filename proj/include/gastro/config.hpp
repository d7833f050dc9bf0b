#pragma once

#include "gastro/integrate.hpp"
#include "gastro/params.hpp"
#include "gastro/scheduler.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gastro {

enum class ScenarioKind { baseline, optimize, fixed, compare, sweep };

const char* scenario_name(ScenarioKind kind);

/// Resolved, validated scenario description: file references, settings and
/// overrides. Built by load_config and optionally adjusted by the CLI.
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::baseline;
  std::string config_path;     // scenario file this was loaded from
  std::string params_path;     // resolved parameter-file path
  std::string treatment_path;  // resolved settings-file path (may be empty)
  std::string out_dir = "out";

  ModelParams params;
  TreatmentConfig treatment;
  IntegratorConfig integ;

  int baseline_days = 3;  ///< untreated trace length for the baseline scenario
  std::optional<double> fixed_dose_mg;  ///< overrides min_fixed_dose in `fixed`
  std::vector<double> k_ag_values{0.015, 0.025, 0.035};
};

/// Loads and fully validates a scenario file:
///   params = <path>            (required; relative to the config file)
///   treatment = <path>         (optional simulation-settings file)
///   out_dir, days, baseline_days, acid_max, dose_max, delta, fixed_dose,
///   kag = v1,v2,...            (optional overrides)
/// Unknown keys are rejected with the nearest valid name; all validation
/// problems are aggregated into one ConfigError.
ScenarioConfig load_config(const std::string& path);

/// Loads a simulation-settings file (treatment + integrator keys).
void load_treatment_file(const std::string& path, TreatmentConfig& tcfg, IntegratorConfig& icfg);

/// Re-validates a config after programmatic/CLI mutation; throws ConfigError
/// listing every violated constraint.
void validate_config(const ScenarioConfig& cfg);

}  // namespace gastro
