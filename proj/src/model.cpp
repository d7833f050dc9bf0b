#include "gastro/model.hpp"

#include <stdexcept>

namespace gastro {

namespace {

// Saturating stimulation K*[E]/([E]+alpha); alpha+[E] must stay positive.
inline double michaelis(double rate, double stimulator, double alpha) {
  const double den = stimulator + alpha;
  if (den <= 0.0) {
    throw std::domain_error("michaelis denominator not positive: stimulator=" +
                            std::to_string(stimulator) + " alpha=" + std::to_string(alpha));
  }
  return rate * stimulator / den;
}

// Inhibition factor 1/(1 + [I]/k).
inline double inhibition(double inhibitor, double k) {
  return 1.0 / (1.0 + inhibitor / k);
}

// Squared acid gate 1/(1 + A^2/(A^2 + k^2)).
inline double acid_gate(double acid, double k) {
  const double a2 = acid * acid;
  return 1.0 / (1.0 + a2 / (a2 + k * k));
}

}  // namespace

StateDerivative derivative_with_food(const GastricState& x, const ModelParams& p,
                                     double ppi_level, double fd) {
  StateDerivative d{};

  // Antral gastrin: ENS, CNS and food drives share the somatostatin
  // inhibition and the acid gate (severity parameter k_AG).
  {
    const double inh = inhibition(x.s_a, p.k_SG) * acid_gate(x.a_c, p.k_AG);
    d[0] = (michaelis(p.N_G * p.K_NG1, x.n_e, p.alpha_NG1) +
            michaelis(p.N_G * p.K_NG2, x.n_c, p.alpha_NG2) +
            michaelis(p.N_G * p.K_FG, fd, p.alpha_FD)) *
               inh -
           (p.k_G + p.beta_G) * x.gtn_a;
  }

  // Corpal gastrin: transport from the antrum, first-order loss.
  d[1] = p.beta_G * x.gtn_a - p.k_G * x.gtn_c;

  // Antral somatostatin: antral acid and ENS drives, self- and CNS-inhibited.
  {
    const double inh = inhibition(x.s_a, p.k_SS) * inhibition(x.n_c, p.k_NS);
    d[2] = (michaelis(p.N_DA * p.K_AS, x.a_a, p.alpha_AS) +
            michaelis(p.N_DA * p.K_NS1, x.n_e, p.alpha_NS1)) *
               inh -
           p.k_S * x.s_a;
  }

  // Corpal somatostatin: corpal gastrin and ENS drives.
  {
    const double inh = inhibition(x.s_c, p.k_SS) * inhibition(x.n_c, p.k_NS);
    d[3] = (michaelis(p.N_DC * p.K_GS, x.gtn_c, p.alpha_GS) +
            michaelis(p.N_DC * p.K_NS2, x.n_e, p.alpha_NS2)) *
               inh -
           p.k_S * x.s_c;
  }

  // Histamine: ENS and gastrin drives, somatostatin-inhibited.
  {
    const double inh = inhibition(x.s_c, p.k_SH);
    d[4] = (michaelis(p.N_E * p.K_NH, x.n_e, p.alpha_NH) +
            michaelis(p.N_E * p.K_GH, x.gtn_c, p.alpha_GH)) *
               inh -
           p.k_H * x.h_c;
  }

  // Corpal acid: three parietal secretion routes, all gated by the active
  // pump fraction and inhibited by corpal somatostatin; the gastrin route is
  // additionally potentiated by histamine. Losses: bicarbonate buffering and
  // transport to the antrum.
  {
    const double inh = inhibition(x.s_c, p.k_SA);
    const double pot_den = x.h_c + p.alpha_H;
    if (pot_den <= 0.0) {
      throw std::domain_error("histamine potentiation denominator not positive");
    }
    const double potentiation = x.h_c / pot_den;
    const double secretion = (michaelis(p.N_P * p.K_HA, x.h_c, p.alpha_HA) +
                              michaelis(p.N_P * p.K_NA, x.n_c, p.alpha_NA) +
                              potentiation * michaelis(p.N_P * p.K_GA, x.gtn_c, p.alpha_GA)) *
                             inh;
    d[5] = x.pp_n * secretion - p.hb * x.a_c * x.b_c - p.beta_A * x.a_c;
  }

  // Antral acid: transport in, washout.
  d[6] = p.beta_A * x.a_c - p.k_A * x.a_a;

  // Bicarbonate, corpus and antrum: CNS-stimulated, buffered, washed out.
  d[7] = michaelis(p.k_bc, x.n_c, p.alpha_NB) - p.hb * x.a_c * x.b_c - p.k_B * x.b_c;
  d[8] = michaelis(p.k_ba, x.n_c, p.alpha_NB) - p.hb * x.a_a * x.b_a - p.k_B * x.b_a;

  // Central / enteric neural stimuli: food drive with acid gating, basal tone.
  d[9] = michaelis(p.N_1, fd, p.k1_Fd) * acid_gate(x.a_c, p.k_AN1) - p.k_NC * x.n_c + p.Bas_1;
  d[10] = michaelis(p.N_2, fd, p.k2_Fd) * acid_gate(x.a_c, p.k_AN2) - p.k_NE * x.n_e + p.Bas_2;

  // Active proton-pump fraction: recovery toward 1, PPI-driven deactivation.
  d[11] = p.K_deg - p.K_r * ppi_level * x.pp_n - p.K_deg * x.pp_n;

  return d;
}

StateDerivative derivative(const GastricState& state, double t, const ModelParams& p,
                           double ppi_level, const FoodProfile& profile) {
  return derivative_with_food(state, p, ppi_level, food_intake(t, profile));
}

}  // namespace gastro
