#pragma once

#include <array>
#include <cstddef>

namespace gastro {

/// The twelve integrated physiological states.
///
/// Concentrations are molar, neural activities and the active-pump fraction
/// dimensionless. Suffixes: _a antrum, _c corpus.
struct GastricState {
  double gtn_a = 0.0;  ///< antral gastrin [M]
  double gtn_c = 0.0;  ///< corpal gastrin [M]
  double s_a = 0.0;    ///< antral somatostatin [M]
  double s_c = 0.0;    ///< corpal somatostatin [M]
  double h_c = 0.0;    ///< corpal histamine [M]
  double a_c = 0.0;    ///< corpal acid [M]
  double a_a = 0.0;    ///< antral acid [M]
  double b_c = 0.0;    ///< corpal bicarbonate [M]
  double b_a = 0.0;    ///< antral bicarbonate [M]
  double n_c = 0.0;    ///< central neural stimulus activity
  double n_e = 0.0;    ///< enteric neural stimulus activity
  double pp_n = 1.0;   ///< active proton-pump fraction, in [0, 1]

  static constexpr std::size_t dim = 12;

  std::array<double, dim> to_array() const {
    return {gtn_a, gtn_c, s_a, s_c, h_c, a_c, a_a, b_c, b_a, n_c, n_e, pp_n};
  }

  static GastricState from_array(const std::array<double, dim>& v) {
    GastricState s;
    s.gtn_a = v[0];
    s.gtn_c = v[1];
    s.s_a = v[2];
    s.s_c = v[3];
    s.h_c = v[4];
    s.a_c = v[5];
    s.a_a = v[6];
    s.b_c = v[7];
    s.b_a = v[8];
    s.n_c = v[9];
    s.n_e = v[10];
    s.pp_n = v[11];
    return s;
  }
};

/// Time derivative of GastricState, same component order.
using StateDerivative = std::array<double, GastricState::dim>;

}  // namespace gastro
