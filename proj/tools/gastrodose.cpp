// gastrodose: simulate gastric acid secretion under PPI dosing and compute
// constraint-enforcing dose schedules.
//
// Exit codes: 0 success, 2 configuration error, 3 infeasible dosing problem,
// 4 numerical failure, 1 other error.

#include "gastro/config.hpp"
#include "gastro/errors.hpp"
#include "gastro/report.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct CliOverrides {
  std::string config_path;
  std::string out_dir;
  std::optional<int> days;
  std::optional<double> acid_max, dose_max, delta, fixed_dose;
  std::vector<double> kag;
};

void add_common(CLI::App* sub, CliOverrides& ov) {
  sub->add_option("--config", ov.config_path, "scenario config file")->required();
  sub->add_option("--out", ov.out_dir, "output directory (overrides config)");
  sub->add_option("--days", ov.days, "number of days (treatment or baseline length)");
  sub->add_option("--acid-max", ov.acid_max, "corpal acid ceiling [M]");
  sub->add_option("--dose-max", ov.dose_max, "maximum single dose [mg]");
  sub->add_option("--delta", ov.delta, "bisection gap tolerance [mg]");
  sub->add_option("--fixed-dose", ov.fixed_dose, "fixed regimen per-dose amount [mg]");
  sub->add_option("--kag", ov.kag, "severity sweep k_AG values [M]")->delimiter(',');
}

int run(gastro::ScenarioKind kind, const CliOverrides& ov) {
  gastro::ScenarioConfig cfg = gastro::load_config(ov.config_path);
  cfg.kind = kind;
  if (!ov.out_dir.empty()) cfg.out_dir = ov.out_dir;
  if (ov.days) {
    cfg.treatment.treatment_days = *ov.days;
    cfg.baseline_days = *ov.days;
  }
  if (ov.acid_max) cfg.treatment.acid_max = *ov.acid_max;
  if (ov.dose_max) cfg.treatment.dose_max_mg = *ov.dose_max;
  if (ov.delta) cfg.treatment.delta_mg = *ov.delta;
  if (ov.fixed_dose) cfg.fixed_dose_mg = *ov.fixed_dose;
  if (!ov.kag.empty()) cfg.k_ag_values = ov.kag;
  gastro::validate_config(cfg);
  gastro::run_scenario(cfg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gastric acid simulation and PPI dose scheduling"};
  app.require_subcommand(1);

  CliOverrides ov;
  std::pair<const char*, gastro::ScenarioKind> kinds[] = {
      {"baseline", gastro::ScenarioKind::baseline},
      {"optimize", gastro::ScenarioKind::optimize},
      {"fixed", gastro::ScenarioKind::fixed},
      {"compare", gastro::ScenarioKind::compare},
      {"sweep", gastro::ScenarioKind::sweep},
  };
  const char* descriptions[] = {
      "untreated baseline trace",
      "receding-horizon optimized treatment",
      "fixed-dose regimen (minimal feasible dose unless --fixed-dose)",
      "optimized vs fixed regimen comparison",
      "severity sweep over k_AG values",
  };
  gastro::ScenarioKind selected{};
  for (std::size_t i = 0; i < std::size(kinds); ++i) {
    CLI::App* sub = app.add_subcommand(kinds[i].first, descriptions[i]);
    add_common(sub, ov);
    const auto kind = kinds[i].second;
    sub->callback([&selected, kind] { selected = kind; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    return run(selected, ov);
  } catch (const gastro::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const gastro::InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const gastro::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
