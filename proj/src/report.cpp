#include "gastro/report.hpp"

#include "gastro/errors.hpp"
#include "gastro/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gastro {

namespace {

namespace fs = std::filesystem;

std::string join(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir + ": " + ec.message());
}

std::string fmt1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

void run_baseline(const ScenarioConfig& cfg) {
  const GastricState rin = run_in(cfg.params, FoodProfile{}, cfg.treatment.run_in_days, cfg.integ);
  const DoseSchedule none;
  const SimulationTrace tr =
      simulate(rin, 0.0, 24.0 * cfg.baseline_days, none, cfg.params, FoodProfile{}, cfg.integ);
  write_trace_csv(join(cfg.out_dir, "baseline_trace.csv"), tr);
  std::cout << "baseline: " << cfg.baseline_days << " untreated days, peak corpal acid "
            << format_num(tr.max_acid_seen) << " M\n";
}

void run_optimize(const ScenarioConfig& cfg) {
  const OptimizationResult res =
      run_treatment(cfg.params, FoodProfile{}, cfg.treatment, cfg.integ);
  write_trace_csv(join(cfg.out_dir, "treatment_trace.csv"), res.trace);
  write_optlog_csv(join(cfg.out_dir, "optimization_log.csv"), res.decisions);
  write_schedule_csv(join(cfg.out_dir, "optimized_schedule.csv"), res.schedule);
  std::cout << "optimize: total intake " << format_num(total_intake(res.schedule))
            << " mg over " << cfg.treatment.treatment_days << " days, max corpal acid "
            << format_num(res.trace.max_acid_seen) << " M (ceiling "
            << format_num(cfg.treatment.acid_max) << ")\n";
}

void run_fixed(const ScenarioConfig& cfg) {
  const FoodProfile profile;
  const GastricState rin = run_in(cfg.params, profile, cfg.treatment.run_in_days, cfg.integ);
  double dose = 0.0;
  if (cfg.fixed_dose_mg) {
    dose = *cfg.fixed_dose_mg;
  } else {
    dose = min_fixed_dose_from(rin, cfg.params, profile, cfg.treatment, cfg.integ);
  }
  const DoseSchedule sched = fixed_regimen(dose, cfg.treatment);
  const SimulationTrace tr = simulate(rin, 0.0, 24.0 * cfg.treatment.treatment_days, sched,
                                      cfg.params, profile, cfg.integ);
  write_trace_csv(join(cfg.out_dir, "fixed_trace.csv"), tr);
  write_schedule_csv(join(cfg.out_dir, "fixed_schedule.csv"), sched);
  std::cout << "fixed: " << format_num(dose) << " mg per dose"
            << (cfg.fixed_dose_mg ? "" : " (minimal feasible)") << ", total "
            << format_num(total_intake(sched)) << " mg, max corpal acid "
            << format_num(tr.max_acid_seen) << " M\n";
}

void run_compare(const ScenarioConfig& cfg) {
  const FoodProfile profile;
  const GastricState rin = run_in(cfg.params, profile, cfg.treatment.run_in_days, cfg.integ);

  const OptimizationResult opt =
      run_treatment_from(rin, cfg.params, profile, cfg.treatment, cfg.integ);

  const double fixed_dose =
      cfg.fixed_dose_mg ? *cfg.fixed_dose_mg
                        : min_fixed_dose_from(rin, cfg.params, profile, cfg.treatment, cfg.integ);
  const DoseSchedule fixed = fixed_regimen(fixed_dose, cfg.treatment);
  const SimulationTrace fixed_tr = simulate(rin, 0.0, 24.0 * cfg.treatment.treatment_days, fixed,
                                            cfg.params, profile, cfg.integ);

  ComparisonReport rep = make_comparison(total_intake(opt.schedule), total_intake(fixed));
  rep.fixed_dose_mg = fixed_dose;
  rep.max_acid_optimized = opt.trace.max_acid_seen;
  rep.max_acid_fixed = fixed_tr.max_acid_seen;
  rep.optimized_satisfied = rep.max_acid_optimized <= cfg.treatment.acid_max + 1e-4;
  rep.fixed_satisfied = rep.max_acid_fixed <= cfg.treatment.acid_max + 1e-4;
  rep.optimized_schedule = opt.schedule;
  rep.fixed_schedule = fixed;
  rep.treatment_days = cfg.treatment.treatment_days;

  write_trace_csv(join(cfg.out_dir, "optimized_trace.csv"), opt.trace);
  write_trace_csv(join(cfg.out_dir, "fixed_trace.csv"), fixed_tr);
  write_optlog_csv(join(cfg.out_dir, "optimization_log.csv"), opt.decisions);
  write_dose_table_csv(join(cfg.out_dir, "optimized_doses.csv"), opt.schedule,
                       cfg.treatment.treatment_days);
  write_dose_table_csv(join(cfg.out_dir, "fixed_doses.csv"), fixed,
                       cfg.treatment.treatment_days);
  emit_report(rep, cfg.out_dir);

  std::cout << "compare: optimized " << format_num(rep.total_optimized_mg) << " mg vs fixed "
            << format_num(rep.total_fixed_mg) << " mg";
  if (rep.percent_reduction) std::cout << " (" << fmt1(*rep.percent_reduction) << "% less)";
  std::cout << "\n";
}

void run_sweep(const ScenarioConfig& cfg) {
  const auto entries =
      sweep_severity(cfg.k_ag_values, cfg.params, FoodProfile{}, cfg.treatment, cfg.integ);

  std::ofstream sum(join(cfg.out_dir, "sweep_summary.csv"));
  if (!sum) throw std::runtime_error("cannot write sweep_summary.csv");
  sum << "k_AG,ok,total_intake_mg,max_AC_M,error\n";
  bool any_failed = false;
  for (const auto& e : entries) {
    if (e.ok) {
      sum << format_num(e.k_ag) << ",1," << format_num(e.total_intake_mg) << ','
          << format_num(e.result.trace.max_acid_seen) << ",\n";
      write_dose_table_csv(join(cfg.out_dir, "sweep_doses_kag_" + format_num(e.k_ag) + ".csv"),
                           e.result.schedule, cfg.treatment.treatment_days);
    } else {
      std::string msg = e.error;
      for (auto& c : msg) {
        if (c == ',' || c == '\n') c = ';';
      }
      sum << format_num(e.k_ag) << ",0,,," << msg << '\n';
      any_failed = true;
    }
    std::cout << "sweep k_AG=" << format_num(e.k_ag) << ": "
              << (e.ok ? "total " + format_num(e.total_intake_mg) + " mg" : "FAILED: " + e.error)
              << "\n";
  }
  if (any_failed) throw InfeasibleError("sweep: at least one k_AG value failed; see sweep_summary.csv");
}

}  // namespace

ComparisonReport make_comparison(double total_optimized, double total_fixed) {
  ComparisonReport rep;
  rep.total_optimized_mg = total_optimized;
  rep.total_fixed_mg = total_fixed;
  if (total_fixed > 0.0) {
    rep.percent_reduction = 100.0 * (total_fixed - total_optimized) / total_fixed;
  }
  return rep;
}

void emit_report(const ComparisonReport& rep, const std::string& dir) {
  ensure_dir(dir);
  {
    std::ofstream csv(join(dir, "summary.csv"));
    if (!csv) throw std::runtime_error("cannot write summary.csv under " + dir);
    csv << "metric,optimized,fixed\n";
    csv << "total_intake_mg," << format_num(rep.total_optimized_mg) << ','
        << format_num(rep.total_fixed_mg) << '\n';
    csv << "max_AC_M," << format_num(rep.max_acid_optimized) << ','
        << format_num(rep.max_acid_fixed) << '\n';
    csv << "constraint_satisfied," << (rep.optimized_satisfied ? 1 : 0) << ','
        << (rep.fixed_satisfied ? 1 : 0) << '\n';
    csv << "percent_reduction,"
        << (rep.percent_reduction ? fmt1(*rep.percent_reduction) : std::string("n/a")) << ",\n";
  }
  {
    std::ofstream txt(join(dir, "summary.txt"));
    if (!txt) throw std::runtime_error("cannot write summary.txt under " + dir);
    txt << "Dose comparison over " << rep.treatment_days << " treatment days\n";
    txt << "  optimized regimen total: " << format_num(rep.total_optimized_mg) << " mg\n";
    txt << "  fixed regimen total:     " << format_num(rep.total_fixed_mg) << " mg ("
        << format_num(rep.fixed_dose_mg) << " mg per dose)\n";
    if (rep.percent_reduction) {
      txt << "  intake reduction:        " << fmt1(*rep.percent_reduction) << "%\n";
    } else {
      txt << "  intake reduction:        n/a (fixed total is zero)\n";
    }
    txt << "  max corpal acid, optimized: " << format_num(rep.max_acid_optimized) << " M"
        << (rep.optimized_satisfied ? " (within ceiling)" : " (VIOLATES ceiling)") << '\n';
    txt << "  max corpal acid, fixed:     " << format_num(rep.max_acid_fixed) << " M"
        << (rep.fixed_satisfied ? " (within ceiling)" : " (VIOLATES ceiling)") << '\n';
  }
}

void run_scenario(const ScenarioConfig& cfg) {
  ensure_dir(cfg.out_dir);
  switch (cfg.kind) {
    case ScenarioKind::baseline: run_baseline(cfg); break;
    case ScenarioKind::optimize: run_optimize(cfg); break;
    case ScenarioKind::fixed: run_fixed(cfg); break;
    case ScenarioKind::compare: run_compare(cfg); break;
    case ScenarioKind::sweep: run_sweep(cfg); break;
  }
}

}  // namespace gastro
