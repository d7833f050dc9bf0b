#include "gastro/food.hpp"

#include "oracle_rhs.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using gastro::FoodProfile;
using gastro::food_intake;

TEST_CASE("dinner-time food level matches direct arithmetic") {
  const FoodProfile fp;
  // dominant term 1.6*(1+tanh(0))*exp(-0.5); earlier pulses add < 5e-5
  CHECK(food_intake(19.0, fp) == doctest::Approx(0.970483).epsilon(1e-4));
  CHECK(food_intake(19.0, fp) == doctest::Approx(oracle::food(19.0)).epsilon(1e-14));
}

TEST_CASE("food level is negligible between meals") {
  const FoodProfile fp;
  CHECK(std::abs(food_intake(3.0, fp)) < 1e-6);
}

TEST_CASE("profile is 24h periodic and non-negative") {
  const FoodProfile fp;
  testsup::Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    const double t = rng.uniform(0.0, 24.0 * 20);
    CHECK(food_intake(t, fp) >= 0.0);
    CHECK(food_intake(t + 24.0, fp) == doctest::Approx(food_intake(t, fp)).epsilon(1e-12));
  }
}

TEST_CASE("food matches the oracle expression everywhere") {
  const FoodProfile fp;
  testsup::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const double t = rng.uniform(0.0, 24.0 * 30);
    CHECK(food_intake(t, fp) == doctest::Approx(oracle::food(t)).epsilon(1e-13));
  }
}

TEST_CASE("frozen-day branch agrees with the floor form inside the day") {
  const FoodProfile fp;
  testsup::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const double t = rng.uniform(48.0, 72.0);
    CHECK(gastro::food_intake_on_day(t, 48.0, fp) == food_intake(t, fp));
  }
}

TEST_CASE("day-boundary jump is small") {
  const FoodProfile fp;
  const double before = food_intake(24.0 - 1e-9, fp);
  const double after = food_intake(24.0 + 1e-9, fp);
  CHECK(std::abs(after - before) < 5e-4);  // measured ~3.1e-4 with defaults
}
