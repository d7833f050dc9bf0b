#pragma once

#include "gastro/config.hpp"
#include "gastro/pk.hpp"

#include <optional>
#include <string>

namespace gastro {

/// Head-to-head outcome of the optimized and fixed regimens. Both regimens
/// share run-in state, slot times and integrator settings.
struct ComparisonReport {
  double total_optimized_mg = 0.0;
  double total_fixed_mg = 0.0;
  double fixed_dose_mg = 0.0;  ///< per-dose amount of the fixed regimen
  std::optional<double> percent_reduction;  ///< absent when total_fixed == 0
  double max_acid_optimized = 0.0;
  double max_acid_fixed = 0.0;
  bool optimized_satisfied = false;
  bool fixed_satisfied = false;
  DoseSchedule optimized_schedule;
  DoseSchedule fixed_schedule;
  int treatment_days = 0;
};

ComparisonReport make_comparison(double total_optimized, double total_fixed);

/// Writes summary.csv and summary.txt under `dir` (idempotent overwrite).
void emit_report(const ComparisonReport& report, const std::string& dir);

/// Executes one scenario, writing its artifacts under cfg.out_dir.
/// Throws ConfigError / InfeasibleError / NumericalError on failure.
void run_scenario(const ScenarioConfig& cfg);

}  // namespace gastro
