#include "gastro/integrate.hpp"

#include "gastro/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace gastro {

namespace {

using Vec = std::array<double, GastricState::dim>;

Vec axpy(const Vec& y, double h, const Vec& d) {
  Vec out;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + h * d[i];
  return out;
}

// Admissibility slack for integration round-off.
constexpr double kInvariantSlack = 1e-9;
constexpr double kTimeEps = 1e-9;

void check_admissible(const Vec& y, double t) {
  for (std::size_t i = 0; i + 1 < y.size(); ++i) {
    if (y[i] < -kInvariantSlack || !std::isfinite(y[i])) {
      throw NumericalError("state component " + std::to_string(i) + " left admissible set at t=" +
                           std::to_string(t) + " (value " + std::to_string(y[i]) + ")");
    }
  }
  const double pp = y[11];
  if (!(pp >= -kInvariantSlack && pp <= 1.0 + kInvariantSlack)) {
    throw NumericalError("pump fraction left [0,1] at t=" + std::to_string(t) + " (value " +
                         std::to_string(pp) + ")");
  }
}

struct SegmentRhs {
  const ModelParams* p;
  const FoodProfile* profile;
  double day_start;   // frozen food branch for this segment
  double ppi_at_a;    // PPI level at segment start (all prefix doses decay together)
  double a;

  Vec operator()(double t, const Vec& y) const {
    const double ppi = ppi_at_a * std::exp(-p->K_el * (t - a));
    const double fd = food_intake_on_day(t, day_start, *profile);
    return derivative_with_food(GastricState::from_array(y), *p, ppi, fd);
  }
};

// Classical RK4 step.
Vec rk4_step(const SegmentRhs& f, double t, const Vec& y, double h) {
  const Vec k1 = f(t, y);
  const Vec k2 = f(t + 0.5 * h, axpy(y, 0.5 * h, k1));
  const Vec k3 = f(t + 0.5 * h, axpy(y, 0.5 * h, k2));
  const Vec k4 = f(t + h, axpy(y, h, k3));
  Vec out;
  for (std::size_t i = 0; i < y.size(); ++i) {
    out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

// Dormand-Prince 5(4) step; returns the 5th-order solution and the scaled
// error norm of the embedded 4th-order difference.
struct Dopri5Result {
  Vec y;
  double err_norm;
};

Dopri5Result dopri5_step(const SegmentRhs& f, double t, const Vec& y, double h, double abs_tol,
                         double rel_tol) {
  static constexpr double a21 = 1.0 / 5.0;
  static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  static constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  static constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                          a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
  static constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                          a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
  static constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                          b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
  static constexpr double e1 = 5179.0 / 57600.0, e3 = 7571.0 / 16695.0, e4 = 393.0 / 640.0,
                          e5 = -92097.0 / 339200.0, e6 = 187.0 / 2100.0, e7 = 1.0 / 40.0;

  const Vec k1 = f(t, y);
  const Vec k2 = f(t + h / 5.0, axpy(y, h * a21, k1));
  Vec tmp;
  for (std::size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
  const Vec k3 = f(t + 3.0 * h / 10.0, tmp);
  for (std::size_t i = 0; i < y.size(); ++i) {
    tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
  }
  const Vec k4 = f(t + 4.0 * h / 5.0, tmp);
  for (std::size_t i = 0; i < y.size(); ++i) {
    tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
  }
  const Vec k5 = f(t + 8.0 * h / 9.0, tmp);
  for (std::size_t i = 0; i < y.size(); ++i) {
    tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
  }
  const Vec k6 = f(t + h, tmp);

  Vec y5;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
  }
  const Vec k7 = f(t + h, y5);

  double err_sq = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double y4i = y[i] + h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
    const double scale = abs_tol + rel_tol * std::max(std::abs(y[i]), std::abs(y5[i]));
    const double e = (y5[i] - y4i) / scale;
    err_sq += e * e;
  }
  return {y5, std::sqrt(err_sq / static_cast<double>(y.size()))};
}

class TraceBuilder {
 public:
  TraceBuilder(const DoseSchedule& schedule, const ModelParams& p, const FoodProfile& profile)
      : schedule_(schedule), p_(p), profile_(profile) {}

  void record(double t, const Vec& y) {
    if (!trace_.samples.empty() && t - trace_.samples.back().time_h <= kTimeEps) return;
    TraceSample s;
    s.time_h = t;
    s.state = GastricState::from_array(y);
    s.food = food_intake(t, profile_);
    s.ppi = ppi_concentration(t, schedule_, p_);
    trace_.samples.push_back(s);
    note_acid(t, y);
  }

  // Track corpal acid at accepted step endpoints, sampled or not.
  void note_acid(double t, const Vec& y) {
    if (y[5] > trace_.max_acid_seen) {
      trace_.max_acid_seen = y[5];
      trace_.max_acid_seen_time = t;
    }
  }

  SimulationTrace take() { return std::move(trace_); }

 private:
  const DoseSchedule& schedule_;
  const ModelParams& p_;
  const FoodProfile& profile_;
  SimulationTrace trace_;
};

// Advance y from t_from to t_to (single smooth segment piece).
void advance_rk4(const SegmentRhs& f, double& t, Vec& y, double t_to, double step_h,
                 TraceBuilder& tb) {
  const double span = t_to - t;
  const int n = std::max(1, static_cast<int>(std::ceil(span / step_h - 1e-12)));
  const double h = span / n;
  for (int i = 0; i < n; ++i) {
    y = rk4_step(f, t, y, h);
    t = (i + 1 == n) ? t_to : t + h;
    check_admissible(y, t);
    tb.note_acid(t, y);
  }
}

void advance_rk45(const SegmentRhs& f, double& t, Vec& y, double t_to, double& h,
                  const IntegratorConfig& cfg, TraceBuilder& tb) {
  while (t < t_to - kTimeEps) {
    const double remaining = t_to - t;
    const double hstep = std::min(h, remaining);
    const auto res = dopri5_step(f, t, y, hstep, cfg.abs_tol, cfg.rel_tol);
    const double err = res.err_norm;
    if (err <= 1.0) {
      t = (hstep >= remaining - kTimeEps) ? t_to : t + hstep;
      y = res.y;
      check_admissible(y, t);
      tb.note_acid(t, y);
      const double grow = (err == 0.0) ? 5.0 : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
      h = hstep * grow;
    } else {
      h = hstep * std::clamp(0.9 * std::pow(err, -0.2), 0.2, 1.0);
      if (h < cfg.min_step_h) {
        throw NumericalError("adaptive step size underflow at t=" + std::to_string(t));
      }
    }
  }
}

}  // namespace

SimulationTrace simulate(const GastricState& initial, double t_start, double t_end,
                         const DoseSchedule& schedule, const ModelParams& p,
                         const FoodProfile& profile, const IntegratorConfig& cfg) {
  if (!(t_start < t_end)) {
    throw ConfigError("simulate: t_start must be < t_end");
  }
  if (cfg.sample_dt_h <= 0.0 || cfg.rk4_step_h <= 0.0 || cfg.abs_tol <= 0.0 ||
      cfg.rel_tol <= 0.0) {
    throw ConfigError("simulate: integrator step sizes and tolerances must be positive");
  }

  // Segment boundaries: dose times and day boundaries interior to the span.
  std::vector<double> bounds{t_start};
  for (double d = 24.0 * std::floor(t_start / 24.0 + kTimeEps) + 24.0; d < t_end - kTimeEps;
       d += 24.0) {
    if (d > t_start + kTimeEps) bounds.push_back(d);
  }
  for (const auto& ev : schedule.events()) {
    if (ev.time_h > t_start + kTimeEps && ev.time_h < t_end - kTimeEps) {
      bounds.push_back(ev.time_h);
    }
  }
  bounds.push_back(t_end);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end(),
                           [](double x, double y) { return std::abs(x - y) <= kTimeEps; }),
               bounds.end());

  TraceBuilder tb(schedule, p, profile);
  Vec y = initial.to_array();
  check_admissible(y, t_start);
  tb.record(t_start, y);

  const double ds = cfg.sample_dt_h;
  for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
    const double a = bounds[s];
    const double b = bounds[s + 1];

    SegmentRhs f;
    f.p = &p;
    f.profile = &profile;
    f.day_start = 24.0 * std::floor(a / 24.0 + kTimeEps);
    f.a = a;
    f.ppi_at_a = ppi_concentration(a, schedule.events_up_to(a + kTimeEps), p);

    // Dense-output targets: global-grid multiples of ds inside (a, b), then b.
    double t = a;
    double h = std::min(ds, b - a);  // deterministic restart at each boundary
    long k = static_cast<long>(std::ceil(a / ds - 1e-6)) ;
    if (static_cast<double>(k) * ds <= a + kTimeEps) ++k;
    for (;; ++k) {
      const double target = static_cast<double>(k) * ds;
      if (target >= b - kTimeEps) break;
      if (cfg.method == StepMethod::rk4_fixed) {
        advance_rk4(f, t, y, target, cfg.rk4_step_h, tb);
      } else {
        advance_rk45(f, t, y, target, h, cfg, tb);
      }
      tb.record(t, y);
    }
    if (cfg.method == StepMethod::rk4_fixed) {
      advance_rk4(f, t, y, b, cfg.rk4_step_h, tb);
    } else {
      advance_rk45(f, t, y, b, h, cfg, tb);
    }
    tb.record(b, y);
  }

  return tb.take();
}

GastricState cold_start_state(const ModelParams& p) {
  GastricState s;  // all concentrations zero
  s.pp_n = 1.0;
  s.n_c = p.Bas_1 / p.k_NC;
  s.n_e = p.Bas_2 / p.k_NE;
  return s;
}

GastricState run_in(const ModelParams& p, const FoodProfile& profile, int days,
                    const IntegratorConfig& cfg) {
  if (days < 1) throw ConfigError("run_in: days must be >= 1");
  const DoseSchedule none;
  const SimulationTrace tr = simulate(cold_start_state(p), 0.0, 24.0 * days, none, p, profile, cfg);
  return tr.samples.back().state;
}

double max_corpal_acid(const SimulationTrace& trace, double t_a, double t_b) {
  double best = -1.0;
  bool found = false;
  for (const auto& s : trace.samples) {
    if (s.time_h >= t_a - kTimeEps && s.time_h <= t_b + kTimeEps) {
      best = found ? std::max(best, s.state.a_c) : s.state.a_c;
      found = true;
    }
  }
  if (!found) {
    throw NumericalError("max_corpal_acid: window [" + std::to_string(t_a) + ", " +
                         std::to_string(t_b) + "] contains no samples");
  }
  return best;
}

}  // namespace gastro
