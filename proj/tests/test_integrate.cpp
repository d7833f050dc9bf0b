#include "gastro/integrate.hpp"

#include "gastro/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace gastro;

namespace {

// Positive Michaelis/dissociation constants with zero rates: the whole RHS
// vanishes identically.
ModelParams frozen_dynamics_params() {
  ModelParams p = testsup::default_params();
  for (const char* key :
       {"K_NG1", "K_NG2", "K_FG", "K_AS", "K_NS1", "K_GS", "K_NS2", "K_NH", "K_GH", "K_HA",
        "K_NA", "K_GA", "k_G", "beta_G", "k_S", "k_H", "beta_A", "k_A", "k_B", "k_bc", "k_ba",
        "hb", "N_1", "N_2", "Bas_1", "Bas_2", "k_NC", "k_NE", "K_deg", "K_r"}) {
    set_param_value(p, key, 1e-300);
  }
  return p;
}

GastricState sample_state() {
  GastricState s;
  s.gtn_a = 0.02;
  s.gtn_c = 0.015;
  s.s_a = 0.05;
  s.s_c = 0.04;
  s.h_c = 0.03;
  s.a_c = 0.02;
  s.a_a = 0.01;
  s.b_c = 0.004;
  s.b_a = 0.002;
  s.n_c = 0.1;
  s.n_e = 0.1;
  s.pp_n = 0.9;
  return s;
}

bool states_equal(const GastricState& a, const GastricState& b) {
  return a.to_array() == b.to_array();
}

}  // namespace

TEST_CASE("vanishing dynamics yield a constant trace") {
  const ModelParams p = frozen_dynamics_params();
  const FoodProfile fp;
  const DoseSchedule none;
  const GastricState x0 = sample_state();
  IntegratorConfig cfg;
  cfg.sample_dt_h = 0.25;
  const SimulationTrace tr = simulate(x0, 0.0, 30.0, none, p, fp, cfg);
  for (const auto& s : tr.samples) {
    for (std::size_t k = 0; k < 12; ++k) {
      CHECK(s.state.to_array()[k] == doctest::Approx(x0.to_array()[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("simulation is deterministic") {
  const ModelParams p = testsup::default_params();
  const FoodProfile fp;
  DoseSchedule sched;
  sched.add({1, 1, 5.0, 40.0});
  const GastricState x0 = cold_start_state(p);
  const SimulationTrace a = simulate(x0, 0.0, 24.0, sched, p, fp, IntegratorConfig{});
  const SimulationTrace b = simulate(x0, 0.0, 24.0, sched, p, fp, IntegratorConfig{});
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].time_h == b.samples[i].time_h);
    CHECK(states_equal(a.samples[i].state, b.samples[i].state));
  }
}

TEST_CASE("stitching at a dose boundary is bit-exact") {
  const ModelParams p = testsup::default_params();
  const FoodProfile fp;
  DoseSchedule sched;
  sched.add({1, 1, 6.0, 55.0});
  const GastricState x0 = cold_start_state(p);
  IntegratorConfig cfg;

  const SimulationTrace once = simulate(x0, 0.0, 12.0, sched, p, fp, cfg);
  const SimulationTrace first = simulate(x0, 0.0, 6.0, sched, p, fp, cfg);
  const SimulationTrace second =
      simulate(first.samples.back().state, 6.0, 12.0, sched, p, fp, cfg);

  CHECK(states_equal(once.samples.back().state, second.samples.back().state));
  // continuity across the split: the boundary state is shared exactly
  CHECK(states_equal(first.samples.back().state, second.samples.front().state));
}

TEST_CASE("inserting a zero-amount dose leaves the trace unchanged within tolerance") {
  const ModelParams p = testsup::default_params();
  const FoodProfile fp;
  const GastricState x0 = cold_start_state(p);
  IntegratorConfig cfg;
  cfg.sample_dt_h = 0.05;

  DoseSchedule without;
  DoseSchedule with;
  with.add({1, 1, 7.5, 0.0});
  const SimulationTrace a = simulate(x0, 0.0, 24.0, without, p, fp, cfg);
  const SimulationTrace b = simulate(x0, 0.0, 24.0, with, p, fp, cfg);

  // compare on the common grid (b has one extra row at 7.5)
  std::size_t j = 0;
  double worst = 0.0;
  for (const auto& sa : a.samples) {
    while (j < b.samples.size() && b.samples[j].time_h < sa.time_h - 1e-9) ++j;
    REQUIRE(j < b.samples.size());
    REQUIRE(b.samples[j].time_h == doctest::Approx(sa.time_h).epsilon(1e-12));
    const auto xa = sa.state.to_array();
    const auto xb = b.samples[j].state.to_array();
    for (std::size_t k = 0; k < xa.size(); ++k) {
      worst = std::max(worst, std::abs(xa[k] - xb[k]));
    }
  }
  CHECK(worst <= 1e-6);
}

TEST_CASE("fixed-step RK4 converges at order >= 3.8") {
  const ModelParams p = testsup::default_params();
  const FoodProfile fp;
  const DoseSchedule none;
  const GastricState x0 = cold_start_state(p);

  auto end_state = [&](double h) {
    IntegratorConfig cfg;
    cfg.method = StepMethod::rk4_fixed;
    cfg.rk4_step_h = h;
    cfg.sample_dt_h = 0.5;
    return simulate(x0, 0.0, 12.0, none, p, fp, cfg).samples.back().state.to_array();
  };

  const auto ref = end_state(0.05 / 8.0);
  const auto e1 = end_state(0.05);
  const auto e2 = end_state(0.025);
  double n1 = 0.0, n2 = 0.0;
  for (std::size_t k = 0; k < ref.size(); ++k) {
    n1 = std::max(n1, std::abs(e1[k] - ref[k]));
    n2 = std::max(n2, std::abs(e2[k] - ref[k]));
  }
  const double order = std::log2(n1 / n2);
  CHECK(order >= 3.8);
}

TEST_CASE("run-in reaches the daily orbit") {
  const ModelParams p = testsup::default_params();
  const FoodProfile fp;
  IntegratorConfig cfg;
  const GastricState rin = run_in(p, fp, 5, cfg);

  CHECK(rin.pp_n == 1.0);  // untreated: no pump deactivation at all

  // one more simulated day vs the day after: relative difference <= 1e-3
  const DoseSchedule none;
  const SimulationTrace tr = simulate(rin, 0.0, 48.0, none, p, fp, cfg);
  const std::size_t half = tr.samples.size() / 2;
  std::array<double, 12> scale{};
  for (const auto& s : tr.samples) {
    const auto x = s.state.to_array();
    for (std::size_t k = 0; k < 12; ++k) scale[k] = std::max(scale[k], std::abs(x[k]));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i + half < tr.samples.size(); ++i) {
    if (std::abs(tr.samples[i].time_h + 24.0 - tr.samples[i + half].time_h) > 1e-6) continue;
    const auto a = tr.samples[i].state.to_array();
    const auto b = tr.samples[i + half].state.to_array();
    for (std::size_t k = 0; k < 12; ++k) {
      worst = std::max(worst, std::abs(a[k] - b[k]) / (scale[k] + 1e-30));
    }
  }
  CHECK(worst <= 1e-3);

  // calibration target: peak corpal acid on the orbit
  CHECK(max_corpal_acid(tr, 0.0, 24.0) == doctest::Approx(0.048).epsilon(0.07));
}

TEST_CASE("max_corpal_acid windows") {
  const ModelParams p = frozen_dynamics_params();
  const FoodProfile fp;
  const DoseSchedule none;
  GastricState x0 = sample_state();
  IntegratorConfig cfg;
  cfg.sample_dt_h = 0.5;
  const SimulationTrace tr = simulate(x0, 0.0, 10.0, none, p, fp, cfg);

  CHECK(max_corpal_acid(tr, 0.0, 10.0) == doctest::Approx(x0.a_c).epsilon(1e-12));
  CHECK(max_corpal_acid(tr, 3.0, 3.0) == doctest::Approx(x0.a_c).epsilon(1e-12));
  CHECK_THROWS_AS(max_corpal_acid(tr, 3.1, 3.4), NumericalError);
}

TEST_CASE("simulate rejects bad spans and validates invariants") {
  const ModelParams p = testsup::default_params();
  const FoodProfile fp;
  const DoseSchedule none;
  CHECK_THROWS_AS(simulate(cold_start_state(p), 5.0, 5.0, none, p, fp, IntegratorConfig{}),
                  ConfigError);
  GastricState bad = cold_start_state(p);
  bad.pp_n = 1.5;
  CHECK_THROWS_AS(simulate(bad, 0.0, 1.0, none, p, fp, IntegratorConfig{}), NumericalError);
}

TEST_CASE("a tolerance unmet at the minimum step reports step failure") {
  const ModelParams p = testsup::default_params();
  const FoodProfile fp;
  const DoseSchedule none;
  IntegratorConfig cfg;
  cfg.rel_tol = 1e-16;
  cfg.abs_tol = 1e-18;
  cfg.min_step_h = 0.005;  // refinement below this is forbidden
  CHECK_THROWS_AS(simulate(cold_start_state(p), 6.5, 8.0, none, p, fp, cfg), NumericalError);
}
