#include "gastro/params.hpp"

#include "gastro/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace gastro {

namespace {

struct Field {
  const char* name;
  double ModelParams::* member;
};

const Field kFields[] = {
    {"N_G", &ModelParams::N_G},
    {"N_E", &ModelParams::N_E},
    {"N_DA", &ModelParams::N_DA},
    {"N_DC", &ModelParams::N_DC},
    {"N_P", &ModelParams::N_P},
    {"K_NG1", &ModelParams::K_NG1},
    {"K_NG2", &ModelParams::K_NG2},
    {"K_FG", &ModelParams::K_FG},
    {"K_AS", &ModelParams::K_AS},
    {"K_NS1", &ModelParams::K_NS1},
    {"K_GS", &ModelParams::K_GS},
    {"K_NS2", &ModelParams::K_NS2},
    {"K_NH", &ModelParams::K_NH},
    {"K_GH", &ModelParams::K_GH},
    {"K_HA", &ModelParams::K_HA},
    {"K_NA", &ModelParams::K_NA},
    {"K_GA", &ModelParams::K_GA},
    {"alpha_NG1", &ModelParams::alpha_NG1},
    {"alpha_NG2", &ModelParams::alpha_NG2},
    {"alpha_FD", &ModelParams::alpha_FD},
    {"alpha_AS", &ModelParams::alpha_AS},
    {"alpha_NS1", &ModelParams::alpha_NS1},
    {"alpha_GS", &ModelParams::alpha_GS},
    {"alpha_NS2", &ModelParams::alpha_NS2},
    {"alpha_NH", &ModelParams::alpha_NH},
    {"alpha_GH", &ModelParams::alpha_GH},
    {"alpha_HA", &ModelParams::alpha_HA},
    {"alpha_NA", &ModelParams::alpha_NA},
    {"alpha_H", &ModelParams::alpha_H},
    {"alpha_NB", &ModelParams::alpha_NB},
    {"alpha_GA", &ModelParams::alpha_GA},
    {"k_SG", &ModelParams::k_SG},
    {"k_AG", &ModelParams::k_AG},
    {"k_SS", &ModelParams::k_SS},
    {"k_NS", &ModelParams::k_NS},
    {"k_SH", &ModelParams::k_SH},
    {"k_SA", &ModelParams::k_SA},
    {"k_G", &ModelParams::k_G},
    {"beta_G", &ModelParams::beta_G},
    {"k_S", &ModelParams::k_S},
    {"k_H", &ModelParams::k_H},
    {"beta_A", &ModelParams::beta_A},
    {"k_A", &ModelParams::k_A},
    {"k_B", &ModelParams::k_B},
    {"k_bc", &ModelParams::k_bc},
    {"k_ba", &ModelParams::k_ba},
    {"hb", &ModelParams::hb},
    {"N_1", &ModelParams::N_1},
    {"N_2", &ModelParams::N_2},
    {"k1_Fd", &ModelParams::k1_Fd},
    {"k2_Fd", &ModelParams::k2_Fd},
    {"k_AN1", &ModelParams::k_AN1},
    {"k_AN2", &ModelParams::k_AN2},
    {"k_NC", &ModelParams::k_NC},
    {"k_NE", &ModelParams::k_NE},
    {"Bas_1", &ModelParams::Bas_1},
    {"Bas_2", &ModelParams::Bas_2},
    {"K_deg", &ModelParams::K_deg},
    {"K_r", &ModelParams::K_r},
    {"V", &ModelParams::V},
    {"m", &ModelParams::m},
    {"K_el", &ModelParams::K_el},
};

const Field* find_field(const std::string& key) {
  for (const auto& f : kFields) {
    if (key == f.name) return &f;
  }
  return nullptr;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string nearest_key(const std::string& key, const std::vector<std::string>& candidates) {
  std::string best;
  std::size_t best_d = std::string::npos;
  for (const auto& c : candidates) {
    const std::size_t d = edit_distance(key, c);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

const std::vector<std::string>& param_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> v;
    for (const auto& f : kFields) v.emplace_back(f.name);
    return v;
  }();
  return keys;
}

double param_value(const ModelParams& p, const std::string& key) {
  const Field* f = find_field(key);
  if (!f) throw ConfigError("unknown parameter key: " + key);
  return p.*(f->member);
}

void set_param_value(ModelParams& p, const std::string& key, double value) {
  const Field* f = find_field(key);
  if (!f) throw ConfigError("unknown parameter key: " + key);
  p.*(f->member) = value;
}

std::vector<std::string> validate_params(const ModelParams& p) {
  std::vector<std::string> issues;
  for (const auto& f : kFields) {
    const double v = p.*(f.member);
    if (!(v > 0.0) || !std::isfinite(v)) {
      issues.push_back(std::string(f.name) + " must be strictly positive, got " +
                       std::to_string(v));
    }
  }
  return issues;
}

ModelParams load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open parameter file: " + path);

  ModelParams p;
  std::map<std::string, int> seen;
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
    const std::string val = trim(line.substr(eq + 1));
    const Field* f = find_field(key);
    if (!f) {
      problems.push_back("line " + std::to_string(lineno) + ": unknown key '" + key +
                         "' (nearest valid name: " + nearest_key(key, param_keys()) + ")");
      continue;
    }
    if (seen.count(key)) {
      problems.push_back("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
      continue;
    }
    seen[key] = lineno;
    try {
      std::size_t used = 0;
      const double v = std::stod(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
      p.*(f->member) = v;
    } catch (const std::exception&) {
      problems.push_back("line " + std::to_string(lineno) + ": cannot parse value '" + val +
                         "' for key '" + key + "'");
    }
  }
  for (const auto& key : param_keys()) {
    if (!seen.count(key)) problems.push_back("missing key: " + key);
  }
  if (problems.empty()) {
    for (auto& issue : validate_params(p)) problems.push_back(issue);
  }
  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "invalid parameter file " << path << ":";
    for (const auto& pr : problems) msg << "\n  - " << pr;
    throw ConfigError(msg.str());
  }
  return p;
}

void save_params(const ModelParams& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write parameter file: " + path);
  for (const auto& f : kFields) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", p.*(f.member));
    out << f.name << " = " << buf << "\n";
  }
}

}  // namespace gastro
