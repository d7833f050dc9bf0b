#include "gastro/pk.hpp"

#include "gastro/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace gastro;

namespace {

DoseSchedule random_schedule(testsup::Rng& rng, int n) {
  DoseSchedule s;
  double t = rng.uniform(0.0, 4.0);
  for (int i = 0; i < n; ++i) {
    DoseEvent ev;
    ev.day = i / 2 + 1;
    ev.slot = i % 2 + 1;
    ev.time_h = t;
    ev.amount_mg = rng.uniform(0.0, 100.0);
    s.add(ev);
    t += rng.uniform(0.5, 14.0);
  }
  return s;
}

}  // namespace

TEST_CASE("empty schedule gives zero concentration") {
  const ModelParams p = testsup::default_params();
  const DoseSchedule s;
  CHECK(ppi_concentration(0.0, s, p) == 0.0);
  CHECK(ppi_concentration(1234.5, s, p) == 0.0);
  CHECK(total_intake(s) == 0.0);
}

TEST_CASE("single dose decays exponentially from D/(V*m)") {
  const ModelParams p = testsup::default_params();
  DoseSchedule s;
  s.add({1, 1, 2.0, 70.5});
  const double c0 = 70.5 / (p.V * p.m);
  CHECK(ppi_concentration(2.0, s, p) == doctest::Approx(c0).epsilon(1e-15));
  CHECK(ppi_concentration(2.0 + 1.0 / p.K_el, s, p) ==
        doctest::Approx(c0 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(ppi_concentration(1.999, s, p) == 0.0);  // causality
}

TEST_CASE("disjoint schedules superpose to machine precision") {
  const ModelParams p = testsup::default_params();
  testsup::Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const DoseSchedule s1 = random_schedule(rng, 4);
    std::vector<DoseEvent> merged = s1.events();
    DoseSchedule s2;
    double t = merged.back().time_h;
    for (int i = 0; i < 4; ++i) {
      t += rng.uniform(0.25, 9.0);
      DoseEvent ev{3 + i / 2, i % 2 + 1, t, rng.uniform(0.0, 80.0)};
      s2.add(ev);
      merged.push_back(ev);
    }
    const DoseSchedule all(merged);
    const double at = rng.uniform(0.0, 120.0);
    const double lhs = ppi_concentration(at, all, p);
    const double rhs = ppi_concentration(at, s1, p) + ppi_concentration(at, s2, p);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    CHECK(lhs >= 0.0);
  }
}

TEST_CASE("future events never contribute") {
  const ModelParams p = testsup::default_params();
  testsup::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const DoseSchedule s = random_schedule(rng, 6);
    const double t = rng.uniform(0.0, 60.0);
    const auto prefix = s.events_up_to(t);
    std::vector<DoseEvent> pruned(prefix.begin(), prefix.end());
    CHECK(ppi_concentration(t, s, p) == ppi_concentration(t, DoseSchedule(pruned), p));
  }
}

TEST_CASE("concentration decays exactly between doses") {
  const ModelParams p = testsup::default_params();
  testsup::Rng rng(6);
  const DoseSchedule s = random_schedule(rng, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const double t1 = rng.uniform(0.0, 80.0);
    const double dt = rng.uniform(0.0, 3.0);
    const double t2 = t1 + dt;
    bool clean = true;  // no events in (t1, t2]
    for (const auto& ev : s.events()) {
      if (ev.time_h > t1 && ev.time_h <= t2) clean = false;
    }
    if (!clean) continue;
    CHECK(ppi_concentration(t2, s, p) ==
          doctest::Approx(ppi_concentration(t1, s, p) * std::exp(-p.K_el * dt)).epsilon(1e-13));
  }
}

TEST_CASE("jump at a dose time equals D/(V*m) exactly") {
  const ModelParams p = testsup::default_params();
  testsup::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const DoseSchedule s = random_schedule(rng, 5);
    const auto& ev = s.events()[static_cast<std::size_t>(rng.next() % s.size())];
    // left limit: same decaying sum without the event at its own time
    std::vector<DoseEvent> before(s.events().begin(), s.events().end());
    std::erase_if(before, [&](const DoseEvent& e) { return e.time_h == ev.time_h; });
    const double left = ppi_concentration(ev.time_h, DoseSchedule(before), p);
    const double right = ppi_concentration(ev.time_h, s, p);
    const double jump = ev.amount_mg / (p.V * p.m);
    // exact up to one rounding of the concentration sum
    CHECK(std::abs((right - left) - jump) <= 4.0 * 2.3e-16 * (left + jump));
  }
}

TEST_CASE("total intake sums amounts") {
  DoseSchedule s;
  for (int d = 0; d < 15; ++d) {
    s.add({d + 1, 1, 24.0 * d + 5.0, 70.5});
    s.add({d + 1, 2, 24.0 * d + 17.0, 70.5});
  }
  CHECK(total_intake(s) == 2115.0);
  double max_single = 0.0;
  for (const auto& ev : s.events()) max_single = std::max(max_single, ev.amount_mg);
  CHECK(total_intake(s) >= max_single);
}

TEST_CASE("schedules reject disorder and negative amounts") {
  DoseSchedule s;
  s.add({1, 1, 5.0, 10.0});
  CHECK_THROWS_AS(s.add({1, 2, 5.0, 10.0}), ConfigError);   // duplicate time
  CHECK_THROWS_AS(s.add({1, 2, 4.0, 10.0}), ConfigError);   // going backwards
  CHECK_THROWS_AS(s.add({1, 2, 6.0, -1.0}), ConfigError);   // negative amount
}
