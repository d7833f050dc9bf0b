#include "gastro/food.hpp"

#include <cmath>

namespace gastro {

namespace {

double pulse_sum(double tau, const FoodProfile& fp) {
  double out = 0.0;
  for (std::size_t i = 0; i < fp.meal_offsets_h.size(); ++i) {
    const double d = tau - fp.meal_offsets_h[i];
    out += fp.amplitudes[i] * (1.0 + std::tanh(fp.steepness * d)) *
           std::exp(-fp.decay_base * (1.0 + fp.decay_slope * d));
  }
  return out;
}

}  // namespace

double food_intake(double t, const FoodProfile& profile) {
  const double ffl = 24.0 * std::floor(t / 24.0);
  return pulse_sum(t - ffl, profile);
}

double food_intake_on_day(double t, double day_start_h, const FoodProfile& profile) {
  return pulse_sum(t - day_start_h, profile);
}

}  // namespace gastro
