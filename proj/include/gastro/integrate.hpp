#pragma once

#include "gastro/food.hpp"
#include "gastro/model.hpp"
#include "gastro/params.hpp"
#include "gastro/pk.hpp"
#include "gastro/state.hpp"

#include <vector>

namespace gastro {

enum class StepMethod {
  rk4_fixed,      ///< classical RK4 with a fixed step (convergence testing)
  rk45_adaptive,  ///< Dormand-Prince 5(4) with PI-free step-size control
};

struct IntegratorConfig {
  StepMethod method = StepMethod::rk45_adaptive;
  double rk4_step_h = 0.005;   ///< fixed-step size [h]
  double abs_tol = 1e-9;       ///< adaptive absolute tolerance
  double rel_tol = 1e-7;       ///< adaptive relative tolerance
  double sample_dt_h = 0.01;   ///< dense-output grid spacing [h]
  double min_step_h = 1e-10;   ///< adaptive step-failure threshold
};

/// One dense-output row.
struct TraceSample {
  double time_h = 0.0;
  GastricState state;
  double food = 0.0;  ///< Fd(t) at the sample
  double ppi = 0.0;   ///< PPI blood level at the sample [mmol/L]
};

/// Densely sampled state trajectory. Samples fall on the global grid of
/// sample_dt_h multiples plus every segment boundary (dose times, day
/// boundaries, span endpoints); times are strictly increasing.
///
/// max_acid_seen additionally folds in the corpal acid value at every
/// accepted integrator step endpoint, so it can only exceed the sampled max.
struct SimulationTrace {
  std::vector<TraceSample> samples;
  double max_acid_seen = 0.0;
  double max_acid_seen_time = 0.0;

  double start_time() const { return samples.front().time_h; }
  double end_time() const { return samples.back().time_h; }
};

/// Integrates the model over [t_start, t_end] under `schedule`.
///
/// Integration is segmented at every dose time and day boundary so that the
/// discontinuous PPI and food inputs never fall inside a step; the state is
/// continuous across segment boundaries. Throws NumericalError if the
/// adaptive controller stalls below min_step_h or a state leaves its
/// admissible set by more than 1e-9.
SimulationTrace simulate(const GastricState& initial, double t_start, double t_end,
                         const DoseSchedule& schedule, const ModelParams& p,
                         const FoodProfile& profile, const IntegratorConfig& cfg);

/// Untreated run-in from the documented cold start (all concentrations zero,
/// pp_n = 1, neural activities at their basal equilibria Bas/k); returns the
/// state after `days` * 24 h.
GastricState run_in(const ModelParams& p, const FoodProfile& profile, int days,
                    const IntegratorConfig& cfg);

/// Cold-start state used by run_in.
GastricState cold_start_state(const ModelParams& p);

/// Maximum sampled corpal acid over window [t_a, t_b] (inclusive).
/// Throws NumericalError if the window contains no samples.
double max_corpal_acid(const SimulationTrace& trace, double t_a, double t_b);

}  // namespace gastro
