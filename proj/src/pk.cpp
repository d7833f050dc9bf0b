#include "gastro/pk.hpp"

#include "gastro/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gastro {

namespace {

void check_order(const std::vector<DoseEvent>& evs) {
  for (std::size_t i = 0; i < evs.size(); ++i) {
    if (evs[i].amount_mg < 0.0) {
      throw ConfigError("dose amount must be non-negative at t=" +
                        std::to_string(evs[i].time_h));
    }
    if (i > 0 && !(evs[i].time_h > evs[i - 1].time_h)) {
      throw ConfigError("dose times must be strictly increasing near t=" +
                        std::to_string(evs[i].time_h));
    }
  }
}

}  // namespace

DoseSchedule::DoseSchedule(std::vector<DoseEvent> events) : events_(std::move(events)) {
  check_order(events_);
}

void DoseSchedule::add(const DoseEvent& ev) {
  if (!events_.empty() && !(ev.time_h > events_.back().time_h)) {
    throw ConfigError("dose times must be strictly increasing near t=" +
                      std::to_string(ev.time_h));
  }
  if (ev.amount_mg < 0.0) {
    throw ConfigError("dose amount must be non-negative at t=" + std::to_string(ev.time_h));
  }
  events_.push_back(ev);
}

std::span<const DoseEvent> DoseSchedule::events_up_to(double t) const {
  auto it = std::upper_bound(events_.begin(), events_.end(), t,
                             [](double v, const DoseEvent& e) { return v < e.time_h; });
  return {events_.data(), static_cast<std::size_t>(it - events_.begin())};
}

double ppi_concentration(double t, std::span<const DoseEvent> events, const ModelParams& p) {
  double c = 0.0;
  for (const auto& ev : events) {
    if (ev.time_h <= t) {
      c += ev.amount_mg / (p.V * p.m) * std::exp(-p.K_el * (t - ev.time_h));
    }
  }
  return c;
}

double ppi_concentration(double t, const DoseSchedule& schedule, const ModelParams& p) {
  return ppi_concentration(t, schedule.events_up_to(t), p);
}

double total_intake(const DoseSchedule& schedule) {
  double sum = 0.0;
  for (const auto& ev : schedule.events()) sum += ev.amount_mg;
  return sum;
}

}  // namespace gastro
