#pragma once

#include "gastro/food.hpp"
#include "gastro/params.hpp"
#include "gastro/state.hpp"

namespace gastro {

/// Right-hand side of the twelve-state model at (state, t).
///
/// ppi_level is the PPI blood concentration input [mmol/L]. The corpal acid
/// equation gates all three parietal secretion terms by pp_n and applies the
/// histamine potentiation factor h_c/(h_c + alpha_H) to the gastrin-mediated
/// term. Pure function of its inputs.
///
/// Throws std::domain_error when any stimulator + Michaelis-constant
/// denominator is not strictly positive (invalid state/parameter combination).
StateDerivative derivative(const GastricState& state, double t, const ModelParams& p,
                           double ppi_level, const FoodProfile& profile);

/// Same RHS with the food level supplied directly instead of evaluated from
/// the profile. Lets the integrator pin the food branch per segment and lets
/// tests force an exact food level.
StateDerivative derivative_with_food(const GastricState& state, const ModelParams& p,
                                     double ppi_level, double food_level);

}  // namespace gastro
