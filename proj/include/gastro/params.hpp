#pragma once

#include <string>
#include <vector>

namespace gastro {

/// All model constants. Time in hours, concentrations in molar, dose in mg,
/// V in liters, m in g/mol; PPI blood level is mg/(L*g/mol) = mmol/L and
/// K_r is per (mmol/L * h).
///
/// Field names follow the parameter-file keys (Greek letters spelled out,
/// e.g. alpha_NG1).
struct ModelParams {
  // cell counts (normalized populations)
  double N_G = 0, N_E = 0, N_DA = 0, N_DC = 0, N_P = 0;
  // maximal secretion rates per cell
  double K_NG1 = 0, K_NG2 = 0, K_FG = 0;
  double K_AS = 0, K_NS1 = 0;
  double K_GS = 0, K_NS2 = 0;
  double K_NH = 0, K_GH = 0;
  double K_HA = 0, K_NA = 0, K_GA = 0;
  // Michaelis constants
  double alpha_NG1 = 0, alpha_NG2 = 0, alpha_FD = 0;
  double alpha_AS = 0, alpha_NS1 = 0;
  double alpha_GS = 0, alpha_NS2 = 0;
  double alpha_NH = 0, alpha_GH = 0;
  double alpha_HA = 0, alpha_NA = 0, alpha_H = 0, alpha_NB = 0, alpha_GA = 0;
  // dissociation constants
  double k_SG = 0, k_AG = 0, k_SS = 0, k_NS = 0, k_SH = 0, k_SA = 0;
  // degradation / transport / washout rates; hb is per (M*h)
  double k_G = 0, beta_G = 0, k_S = 0, k_H = 0, beta_A = 0, k_A = 0, k_B = 0;
  double k_bc = 0, k_ba = 0, hb = 0;
  // neural stimulus constants
  double N_1 = 0, N_2 = 0, k1_Fd = 0, k2_Fd = 0, k_AN1 = 0, k_AN2 = 0;
  double k_NC = 0, k_NE = 0, Bas_1 = 0, Bas_2 = 0;
  // proton-pump constants
  double K_deg = 0, K_r = 0;
  // pharmacokinetics
  double V = 0, m = 0, K_el = 0;
};

/// Names of all parameter-file keys, in file order.
const std::vector<std::string>& param_keys();

/// Read one value by key. Throws ConfigError on unknown key.
double param_value(const ModelParams& p, const std::string& key);

/// Write one value by key. Throws ConfigError on unknown key.
void set_param_value(ModelParams& p, const std::string& key, double value);

/// Returns a diagnostic per violated constraint (empty means valid).
/// Every parameter must be strictly positive.
std::vector<std::string> validate_params(const ModelParams& p);

/// Loads a flat key-value parameter file ("key = value", '#' comments).
/// Rejects unknown keys (suggesting the nearest valid name), missing keys,
/// and non-positive values; all problems are reported in one ConfigError.
ModelParams load_params(const std::string& path);

/// Writes the parameter file representation of `p` to `path`.
void save_params(const ModelParams& p, const std::string& path);

/// Candidate with the smallest edit distance to `key` (diagnostics).
std::string nearest_key(const std::string& key, const std::vector<std::string>& candidates);

}  // namespace gastro
