#include "gastro/scheduler.hpp"

#include "gastro/errors.hpp"

#include <cmath>
#include <future>
#include <sstream>
#include <string>

namespace gastro {

namespace {

DoseEvent make_event(double t, double dose, const TreatmentConfig& tcfg) {
  DoseEvent ev;
  ev.time_h = t;
  ev.amount_mg = dose;
  ev.day = static_cast<int>(std::floor(t / 24.0 + 1e-9)) + 1;
  const double within = t - 24.0 * (ev.day - 1);
  ev.slot = (std::abs(within - tcfg.slot2_h) < std::abs(within - tcfg.slot1_h)) ? 2 : 1;
  return ev;
}

// Horizon simulation with a candidate dose appended; feasibility uses the
// acid maximum over samples and accepted step endpoints.
double horizon_peak(const GastricState& state, double t_dose, const DoseSchedule& past,
                    double candidate, const ModelParams& p, const FoodProfile& profile,
                    const TreatmentConfig& tcfg, const IntegratorConfig& icfg) {
  DoseSchedule sched(past.events());
  sched.add(make_event(t_dose, candidate, tcfg));
  const SimulationTrace tr =
      simulate(state, t_dose, t_dose + tcfg.horizon_h, sched, p, profile, icfg);
  return tr.max_acid_seen;
}

void append_trace(SimulationTrace& into, SimulationTrace&& part) {
  std::size_t begin = 0;
  if (!into.samples.empty() && !part.samples.empty() &&
      part.samples.front().time_h - into.samples.back().time_h <= 1e-9) {
    begin = 1;  // boundary row already present
  }
  into.samples.insert(into.samples.end(), part.samples.begin() + begin, part.samples.end());
  if (part.max_acid_seen > into.max_acid_seen) {
    into.max_acid_seen = part.max_acid_seen;
    into.max_acid_seen_time = part.max_acid_seen_time;
  }
}

SimulationTrace single_sample_trace(const GastricState& state, double t,
                                    const DoseSchedule& schedule, const ModelParams& p,
                                    const FoodProfile& profile) {
  SimulationTrace tr;
  TraceSample s;
  s.time_h = t;
  s.state = state;
  s.food = food_intake(t, profile);
  s.ppi = ppi_concentration(t, schedule, p);
  tr.samples.push_back(s);
  tr.max_acid_seen = state.a_c;
  tr.max_acid_seen_time = t;
  return tr;
}

}  // namespace

std::vector<std::string> validate_treatment(const TreatmentConfig& t) {
  std::vector<std::string> issues;
  if (t.treatment_days < 0) issues.push_back("treatment_days must be >= 0");
  if (!(t.slot1_h >= 0.0 && t.slot1_h < 24.0)) issues.push_back("slot1_h must be in [0, 24)");
  if (!(t.slot2_h >= 0.0 && t.slot2_h < 24.0)) issues.push_back("slot2_h must be in [0, 24)");
  if (!(t.slot1_h < t.slot2_h)) issues.push_back("slot1_h must be earlier than slot2_h");
  if (!(t.horizon_h > 0.0)) issues.push_back("horizon_h must be > 0");
  if (!(t.acid_max > 0.0)) issues.push_back("acid_max must be > 0");
  if (!(t.dose_max_mg > 0.0)) issues.push_back("dose_max_mg must be > 0");
  if (!(t.delta_mg > 0.0)) issues.push_back("delta_mg must be > 0");
  if (t.max_iterations < 8) issues.push_back("max_iterations must be >= 8");
  if (t.run_in_days < 1) issues.push_back("run_in_days must be >= 1");
  return issues;
}

std::vector<double> dosing_times(const TreatmentConfig& tcfg) {
  std::vector<double> times;
  times.reserve(2 * static_cast<std::size_t>(std::max(0, tcfg.treatment_days)));
  for (int d = 0; d < tcfg.treatment_days; ++d) {
    times.push_back(24.0 * d + tcfg.slot1_h);
    times.push_back(24.0 * d + tcfg.slot2_h);
  }
  return times;
}

DoseDecision optimize_dose(const GastricState& state, double t_dose, const DoseSchedule& past,
                           const ModelParams& p, const FoodProfile& profile,
                           const TreatmentConfig& tcfg, const IntegratorConfig& icfg) {
  auto peak_for = [&](double candidate) {
    return horizon_peak(state, t_dose, past, candidate, p, profile, tcfg, icfg);
  };

  DoseDecision dec;
  dec.time_h = t_dose;

  // Algorithm: candidate 0 first; if it violates, establish the feasible
  // upper bound at d_max (erroring out when even d_max violates), then
  // bisect and return the last feasible upper bound.
  int iterations = 1;
  double dose = 0.0;
  if (peak_for(0.0) > tcfg.acid_max) {
    const double peak_dmax = peak_for(tcfg.dose_max_mg);
    ++iterations;
    if (peak_dmax > tcfg.acid_max) {
      std::ostringstream msg;
      msg << "no feasible dose at t=" << t_dose << " h: d_max=" << tcfg.dose_max_mg
          << " mg still peaks at " << peak_dmax << " M > " << tcfg.acid_max << " M";
      throw InfeasibleError(msg.str());
    }
    double lower = 0.0;
    double upper = tcfg.dose_max_mg;
    while (upper - lower > tcfg.delta_mg) {
      if (iterations >= tcfg.max_iterations) {
        throw NumericalError("optimize_dose: iteration cap reached at t=" +
                             std::to_string(t_dose));
      }
      const double mid = 0.5 * (lower + upper);
      ++iterations;
      if (peak_for(mid) <= tcfg.acid_max) {
        upper = mid;
      } else {
        lower = mid;
      }
    }
    dose = upper;
  }

  // Verify the returned dose with one final simulation.
  dec.dose_mg = dose;
  dec.iterations = iterations;
  dec.peak_acid_horizon = peak_for(dose);
  dec.feasible = dec.peak_acid_horizon <= tcfg.acid_max;
  return dec;
}

OptimizationResult run_treatment_from(const GastricState& run_in_state, const ModelParams& p,
                                      const FoodProfile& profile, const TreatmentConfig& tcfg,
                                      const IntegratorConfig& icfg) {
  OptimizationResult result;
  const std::vector<double> times = dosing_times(tcfg);
  if (times.empty()) {
    result.trace = single_sample_trace(run_in_state, 0.0, result.schedule, p, profile);
    return result;
  }

  GastricState state = run_in_state;
  double t = 0.0;
  const double t_end = 24.0 * tcfg.treatment_days;
  for (const double t_dose : times) {
    if (t_dose > t + 1e-9) {
      SimulationTrace seg = simulate(state, t, t_dose, result.schedule, p, profile, icfg);
      state = seg.samples.back().state;
      t = t_dose;
      append_trace(result.trace, std::move(seg));
    }
    DoseDecision dec;
    try {
      dec = optimize_dose(state, t_dose, result.schedule, p, profile, tcfg, icfg);
    } catch (const InfeasibleError& e) {
      throw InfeasibleError("treatment infeasible at dosing time t=" + std::to_string(t_dose) +
                            " h: " + e.what());
    } catch (const NumericalError& e) {
      throw NumericalError("optimization failed at dosing time t=" + std::to_string(t_dose) +
                           " h: " + e.what());
    }
    result.decisions.push_back(dec);
    result.schedule.add(make_event(t_dose, dec.dose_mg, tcfg));
  }
  SimulationTrace seg = simulate(state, t, t_end, result.schedule, p, profile, icfg);
  append_trace(result.trace, std::move(seg));
  return result;
}

OptimizationResult run_treatment(const ModelParams& p, const FoodProfile& profile,
                                 const TreatmentConfig& tcfg, const IntegratorConfig& icfg) {
  return run_treatment_from(run_in(p, profile, tcfg.run_in_days, icfg), p, profile, tcfg, icfg);
}

DoseSchedule fixed_regimen(double dose_mg, const TreatmentConfig& tcfg) {
  if (!(dose_mg >= 0.0 && dose_mg <= tcfg.dose_max_mg)) {
    throw ConfigError("fixed_regimen: dose " + std::to_string(dose_mg) + " mg outside [0, " +
                      std::to_string(tcfg.dose_max_mg) + "]");
  }
  DoseSchedule sched;
  for (const double t : dosing_times(tcfg)) {
    sched.add(make_event(t, dose_mg, tcfg));
  }
  return sched;
}

double min_fixed_dose_from(const GastricState& run_in_state, const ModelParams& p,
                           const FoodProfile& profile, const TreatmentConfig& tcfg,
                           const IntegratorConfig& icfg) {
  if (tcfg.treatment_days < 1) {
    throw ConfigError("min_fixed_dose: treatment_days must be >= 1");
  }
  // The ceiling is enforced from the first administration onward; the
  // stretch before it has no control authority (causality), so it is
  // excluded from the feasibility window.
  const double t_first = tcfg.slot1_h;
  const double t_end = 24.0 * tcfg.treatment_days;
  const GastricState at_first =
      simulate(run_in_state, 0.0, t_first, DoseSchedule{}, p, profile, icfg)
          .samples.back()
          .state;
  auto peak_for = [&](double dose) {
    const SimulationTrace tr =
        simulate(at_first, t_first, t_end, fixed_regimen(dose, tcfg), p, profile, icfg);
    return tr.max_acid_seen;
  };

  if (peak_for(0.0) <= tcfg.acid_max) return 0.0;
  const double peak_dmax = peak_for(tcfg.dose_max_mg);
  if (peak_dmax > tcfg.acid_max) {
    std::ostringstream msg;
    msg << "fixed regimen at d_max=" << tcfg.dose_max_mg << " mg still peaks at " << peak_dmax
        << " M > " << tcfg.acid_max << " M";
    throw InfeasibleError(msg.str());
  }
  int iterations = 2;
  double lower = 0.0;
  double upper = tcfg.dose_max_mg;
  while (upper - lower > tcfg.delta_mg) {
    if (iterations >= tcfg.max_iterations) {
      throw NumericalError("min_fixed_dose: iteration cap reached");
    }
    const double mid = 0.5 * (lower + upper);
    ++iterations;
    if (peak_for(mid) <= tcfg.acid_max) {
      upper = mid;
    } else {
      lower = mid;
    }
  }
  return upper;
}

double min_fixed_dose(const ModelParams& p, const FoodProfile& profile,
                      const TreatmentConfig& tcfg, const IntegratorConfig& icfg) {
  return min_fixed_dose_from(run_in(p, profile, tcfg.run_in_days, icfg), p, profile, tcfg, icfg);
}

std::vector<SweepEntry> sweep_severity(const std::vector<double>& k_ag_values,
                                       const ModelParams& p, const FoodProfile& profile,
                                       const TreatmentConfig& tcfg,
                                       const IntegratorConfig& icfg) {
  auto run_one = [&](double k_ag) {
    SweepEntry entry;
    entry.k_ag = k_ag;
    try {
      if (!(k_ag > 0.0)) throw ConfigError("k_AG must be > 0");
      ModelParams patient = p;
      patient.k_AG = k_ag;
      entry.result = run_treatment(patient, profile, tcfg, icfg);
      entry.total_intake_mg = total_intake(entry.result.schedule);
      entry.ok = true;
    } catch (const std::exception& e) {
      entry.ok = false;
      entry.error = e.what();
    }
    return entry;
  };

  // Patients are independent; fan out and collect in input order.
  std::vector<std::future<SweepEntry>> futures;
  futures.reserve(k_ag_values.size());
  for (const double v : k_ag_values) {
    futures.push_back(std::async(std::launch::async, run_one, v));
  }
  std::vector<SweepEntry> entries;
  entries.reserve(futures.size());
  for (auto& f : futures) entries.push_back(f.get());
  return entries;
}

}  // namespace gastro
