#pragma once

#include "gastro/integrate.hpp"
#include "gastro/pk.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gastro {

/// Treatment-level settings: constraint ceiling, dosing slots, bisection
/// tolerances.
struct TreatmentConfig {
  int treatment_days = 15;
  double slot1_h = 5.0;        ///< first daily dosing time [h within day]
  double slot2_h = 17.0;       ///< second daily dosing time [h within day]
  double horizon_h = 12.0;     ///< prediction horizon T_p [h]
  double acid_max = 0.035;     ///< corpal acid ceiling A_max [M]
  double dose_max_mg = 100.0;  ///< largest allowed single dose d_max [mg]
  double delta_mg = 0.1;       ///< bisection gap tolerance [mg]
  int max_iterations = 200;    ///< safety cap on bisection simulations
  int run_in_days = 6;         ///< untreated run-in length before treatment
};

/// Returns a diagnostic per violated constraint (empty means valid).
std::vector<std::string> validate_treatment(const TreatmentConfig& t);

/// Outcome of one per-dose optimization.
struct DoseDecision {
  double time_h = 0.0;
  double dose_mg = 0.0;
  int iterations = 0;       ///< feasibility simulations used by the search
  bool feasible = false;    ///< verification re-simulation satisfied the ceiling
  double peak_acid_horizon = 0.0;  ///< max corpal acid over the dose's horizon [M]
};

struct OptimizationResult {
  DoseSchedule schedule;
  std::vector<DoseDecision> decisions;
  SimulationTrace trace;  ///< plant trace over the full treatment span
};

/// Smallest dose in [0, d_max] keeping corpal acid <= acid_max over
/// [t_dose, t_dose + horizon], found by bisection over horizon simulations.
///
/// The search simulates candidate 0 first; if infeasible, d_max is checked
/// (InfeasibleError when even d_max violates) and becomes the initial
/// feasible upper bound. Returns the last feasible upper bound (within
/// delta_mg of the infeasible lower bound) after verifying it with one extra
/// simulation. `past` must contain all doses administered before t_dose.
DoseDecision optimize_dose(const GastricState& state, double t_dose, const DoseSchedule& past,
                           const ModelParams& p, const FoodProfile& profile,
                           const TreatmentConfig& tcfg, const IntegratorConfig& icfg);

/// Receding-horizon treatment: run-in, then alternate plant simulation to
/// the next dosing slot with optimize_dose there, over treatment_days.
OptimizationResult run_treatment(const ModelParams& p, const FoodProfile& profile,
                                 const TreatmentConfig& tcfg, const IntegratorConfig& icfg);

/// Same treatment loop starting from a caller-supplied run-in state.
OptimizationResult run_treatment_from(const GastricState& run_in_state, const ModelParams& p,
                                      const FoodProfile& profile, const TreatmentConfig& tcfg,
                                      const IntegratorConfig& icfg);

/// Identical dose at every slot of every treatment day.
/// Throws ConfigError if dose is outside [0, dose_max_mg].
DoseSchedule fixed_regimen(double dose_mg, const TreatmentConfig& tcfg);

/// Smallest per-dose amount whose fixed regimen keeps corpal acid under the
/// ceiling over the whole treatment span, by bisection over full-treatment
/// simulations from the run-in state. InfeasibleError if d_max fails.
double min_fixed_dose(const ModelParams& p, const FoodProfile& profile,
                      const TreatmentConfig& tcfg, const IntegratorConfig& icfg);

/// min_fixed_dose starting from a caller-supplied run-in state.
double min_fixed_dose_from(const GastricState& run_in_state, const ModelParams& p,
                           const FoodProfile& profile, const TreatmentConfig& tcfg,
                           const IntegratorConfig& icfg);

/// One severity-sweep patient: k_AG value, outcome or error text.
struct SweepEntry {
  double k_ag = 0.0;
  bool ok = false;
  std::string error;
  OptimizationResult result;   ///< valid when ok
  double total_intake_mg = 0.0;
};

/// Re-runs run_in + run_treatment for each k_AG value (patients run
/// concurrently; outputs are ordered like the input). Per-value failures are
/// captured in the entry, not thrown.
std::vector<SweepEntry> sweep_severity(const std::vector<double>& k_ag_values,
                                       const ModelParams& p, const FoodProfile& profile,
                                       const TreatmentConfig& tcfg, const IntegratorConfig& icfg);

/// Dose times for the configured slots, hours since treatment start.
std::vector<double> dosing_times(const TreatmentConfig& tcfg);

}  // namespace gastro
