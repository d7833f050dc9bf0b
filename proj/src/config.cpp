#include "gastro/config.hpp"

#include "gastro/errors.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace gastro {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// key -> (value, line) pairs of a flat "key = value" file.
std::map<std::string, std::pair<std::string, int>> read_kv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::map<std::string, std::pair<std::string, int>> kv;
  std::vector<std::string> problems;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      problems.push_back("line " + std::to_string(lineno) + ": expected 'key = value'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    if (kv.count(key)) {
      problems.push_back("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
      continue;
    }
    kv[key] = {trim(line.substr(eq + 1)), lineno};
  }
  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "invalid config file " << path << ":";
    for (const auto& p : problems) msg << "\n  - " << p;
    throw ConfigError(msg.str());
  }
  return kv;
}

double parse_double(const std::string& key, const std::string& val,
                    std::vector<std::string>& problems) {
  try {
    std::size_t used = 0;
    const double v = std::stod(val, &used);
    if (used != val.size()) throw std::invalid_argument(val);
    return v;
  } catch (const std::exception&) {
    problems.push_back("cannot parse value '" + val + "' for key '" + key + "'");
    return 0.0;
  }
}

int parse_int(const std::string& key, const std::string& val,
              std::vector<std::string>& problems) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(val, &used);
    if (used != val.size()) throw std::invalid_argument(val);
    return v;
  } catch (const std::exception&) {
    problems.push_back("cannot parse value '" + val + "' for key '" + key + "'");
    return 0;
  }
}

std::vector<double> parse_double_list(const std::string& key, const std::string& val,
                                      std::vector<std::string>& problems) {
  std::vector<double> out;
  std::stringstream ss(val);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_double(key, item, problems));
  }
  if (out.empty()) problems.push_back("empty list for key '" + key + "'");
  return out;
}

std::string resolve(const std::string& base_file, const std::string& rel) {
  namespace fs = std::filesystem;
  fs::path p(rel);
  if (p.is_absolute()) return p.string();
  return (fs::path(base_file).parent_path() / p).lexically_normal().string();
}

const std::vector<std::string> kTreatmentKeys = {
    "treatment_days", "slot1_h",  "slot2_h",       "horizon_h", "acid_max_M",
    "dose_max_mg",    "delta_mg", "max_iterations", "run_in_days",
    "integ_method",   "rk4_step_h", "abs_tol",     "rel_tol",   "sample_dt_h"};

const std::vector<std::string> kScenarioKeys = {
    "params", "treatment", "out_dir",    "days", "baseline_days",
    "acid_max", "dose_max", "delta",     "fixed_dose", "kag"};

}  // namespace

const char* scenario_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::baseline: return "baseline";
    case ScenarioKind::optimize: return "optimize";
    case ScenarioKind::fixed: return "fixed";
    case ScenarioKind::compare: return "compare";
    case ScenarioKind::sweep: return "sweep";
  }
  return "?";
}

void load_treatment_file(const std::string& path, TreatmentConfig& tcfg, IntegratorConfig& icfg) {
  auto kv = read_kv_file(path);
  std::vector<std::string> problems;
  for (const auto& [key, vl] : kv) {
    const std::string& val = vl.first;
    if (key == "treatment_days") tcfg.treatment_days = parse_int(key, val, problems);
    else if (key == "slot1_h") tcfg.slot1_h = parse_double(key, val, problems);
    else if (key == "slot2_h") tcfg.slot2_h = parse_double(key, val, problems);
    else if (key == "horizon_h") tcfg.horizon_h = parse_double(key, val, problems);
    else if (key == "acid_max_M") tcfg.acid_max = parse_double(key, val, problems);
    else if (key == "dose_max_mg") tcfg.dose_max_mg = parse_double(key, val, problems);
    else if (key == "delta_mg") tcfg.delta_mg = parse_double(key, val, problems);
    else if (key == "max_iterations") tcfg.max_iterations = parse_int(key, val, problems);
    else if (key == "run_in_days") tcfg.run_in_days = parse_int(key, val, problems);
    else if (key == "integ_method") {
      if (val == "rk45") icfg.method = StepMethod::rk45_adaptive;
      else if (val == "rk4") icfg.method = StepMethod::rk4_fixed;
      else problems.push_back("integ_method must be rk45 or rk4, got '" + val + "'");
    } else if (key == "rk4_step_h") icfg.rk4_step_h = parse_double(key, val, problems);
    else if (key == "abs_tol") icfg.abs_tol = parse_double(key, val, problems);
    else if (key == "rel_tol") icfg.rel_tol = parse_double(key, val, problems);
    else if (key == "sample_dt_h") icfg.sample_dt_h = parse_double(key, val, problems);
    else {
      problems.push_back("unknown key '" + key + "' (nearest valid name: " +
                         nearest_key(key, kTreatmentKeys) + ")");
    }
  }
  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "invalid settings file " << path << ":";
    for (const auto& p : problems) msg << "\n  - " << p;
    throw ConfigError(msg.str());
  }
}

void validate_config(const ScenarioConfig& cfg) {
  std::vector<std::string> problems;
  for (auto& issue : validate_treatment(cfg.treatment)) problems.push_back(issue);
  for (auto& issue : validate_params(cfg.params)) problems.push_back(issue);
  if (cfg.baseline_days < 1) problems.push_back("baseline_days must be >= 1");
  if (!(cfg.integ.sample_dt_h > 0.0)) problems.push_back("sample_dt_h must be > 0");
  if (!(cfg.integ.rk4_step_h > 0.0)) problems.push_back("rk4_step_h must be > 0");
  if (!(cfg.integ.abs_tol > 0.0)) problems.push_back("abs_tol must be > 0");
  if (!(cfg.integ.rel_tol > 0.0)) problems.push_back("rel_tol must be > 0");
  if (cfg.fixed_dose_mg &&
      !(*cfg.fixed_dose_mg >= 0.0 && *cfg.fixed_dose_mg <= cfg.treatment.dose_max_mg)) {
    problems.push_back("fixed_dose must be in [0, dose_max]");
  }
  if (cfg.k_ag_values.empty()) problems.push_back("kag list must not be empty");
  for (const double v : cfg.k_ag_values) {
    if (!(v > 0.0)) problems.push_back("kag values must be > 0");
  }
  if (cfg.out_dir.empty()) problems.push_back("out_dir must not be empty");
  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "invalid configuration:";
    for (const auto& p : problems) msg << "\n  - " << p;
    throw ConfigError(msg.str());
  }
}

ScenarioConfig load_config(const std::string& path) {
  ScenarioConfig cfg;
  cfg.config_path = path;
  auto kv = read_kv_file(path);

  std::vector<std::string> problems;
  std::optional<int> days, baseline_days;
  std::optional<double> acid_max, dose_max, delta;
  for (const auto& [key, vl] : kv) {
    const std::string& val = vl.first;
    if (key == "params") cfg.params_path = resolve(path, val);
    else if (key == "treatment") cfg.treatment_path = resolve(path, val);
    else if (key == "out_dir") cfg.out_dir = val;
    else if (key == "days") days = parse_int(key, val, problems);
    else if (key == "baseline_days") baseline_days = parse_int(key, val, problems);
    else if (key == "acid_max") acid_max = parse_double(key, val, problems);
    else if (key == "dose_max") dose_max = parse_double(key, val, problems);
    else if (key == "delta") delta = parse_double(key, val, problems);
    else if (key == "fixed_dose") cfg.fixed_dose_mg = parse_double(key, val, problems);
    else if (key == "kag") cfg.k_ag_values = parse_double_list(key, val, problems);
    else {
      problems.push_back("unknown key '" + key + "' (nearest valid name: " +
                         nearest_key(key, kScenarioKeys) + ")");
    }
  }
  if (cfg.params_path.empty()) {
    problems.push_back("missing required key 'params' (path to the parameter file)");
  }
  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "invalid config file " << path << ":";
    for (const auto& p : problems) msg << "\n  - " << p;
    throw ConfigError(msg.str());
  }

  if (!cfg.treatment_path.empty()) {
    load_treatment_file(cfg.treatment_path, cfg.treatment, cfg.integ);
  }
  // scenario-file overrides win over the settings file
  if (acid_max) cfg.treatment.acid_max = *acid_max;
  if (dose_max) cfg.treatment.dose_max_mg = *dose_max;
  if (delta) cfg.treatment.delta_mg = *delta;
  if (days) {
    cfg.treatment.treatment_days = *days;
    cfg.baseline_days = *days;
  }
  if (baseline_days) cfg.baseline_days = *baseline_days;

  cfg.params = load_params(cfg.params_path);
  validate_config(cfg);
  return cfg;
}

}  // namespace gastro
