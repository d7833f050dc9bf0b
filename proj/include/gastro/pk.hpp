#pragma once

#include "gastro/params.hpp"

#include <span>
#include <vector>

namespace gastro {

/// One administered dose. `day` is 1-based, `slot` is 1 or 2 within the day.
struct DoseEvent {
  int day = 1;
  int slot = 1;
  double time_h = 0.0;
  double amount_mg = 0.0;
};

/// Ordered dose record: times strictly increasing, amounts non-negative.
class DoseSchedule {
 public:
  DoseSchedule() = default;
  /// Validates ordering/non-negativity; throws ConfigError on violation.
  explicit DoseSchedule(std::vector<DoseEvent> events);

  /// Appends an event; must be strictly later than the last one.
  void add(const DoseEvent& ev);

  const std::vector<DoseEvent>& events() const { return events_; }
  bool empty() const { return events_.empty(); }
  std::size_t size() const { return events_.size(); }

  /// Events with time_h <= t (the causal prefix at time t).
  std::span<const DoseEvent> events_up_to(double t) const;

 private:
  std::vector<DoseEvent> events_;
};

/// PPI blood concentration [mmol/L] at time t: sum over doses with
/// time_h <= t of amount/(V*m) * exp(-K_el*(t - time_h)). A dose at exactly
/// t is included (it takes effect at t+).
double ppi_concentration(double t, const DoseSchedule& schedule, const ModelParams& p);

/// Same sum restricted to an explicit event prefix.
double ppi_concentration(double t, std::span<const DoseEvent> events, const ModelParams& p);

/// Sum of all dose amounts [mg].
double total_intake(const DoseSchedule& schedule);

}  // namespace gastro
