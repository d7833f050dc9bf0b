#pragma once

#include <array>

namespace gastro {

/// Daily three-meal forcing. Each meal contributes a pulse
///   amp * (1 + tanh(steepness*(tau - offset))) * exp(-decay_base*(1 + decay_slope*(tau - offset)))
/// where tau is the time since the start of the current day; the day resets
/// every 24 h, which leaves a small jump (~3e-4 with the default shape) at
/// day boundaries.
struct FoodProfile {
  std::array<double, 3> meal_offsets_h{7.0, 13.0, 19.0};
  std::array<double, 3> amplitudes{0.4, 1.0, 1.6};
  double steepness = 3.14159265358979323846;
  double decay_base = 0.5;
  double decay_slope = 3.5;
};

/// Food level at absolute time t >= 0 (24 h periodic).
double food_intake(double t, const FoodProfile& profile);

/// Food level with the daily reset frozen at day_start_h; equals
/// food_intake on [day_start_h, day_start_h + 24) and extends the same
/// smooth branch to the right endpoint. The integrator uses this to keep
/// each integration segment on a single smooth branch.
double food_intake_on_day(double t, double day_start_h, const FoodProfile& profile);

}  // namespace gastro
