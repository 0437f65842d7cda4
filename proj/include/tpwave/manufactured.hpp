#pragma once

#include "tpwave/closed_form.hpp"
#include "tpwave/model.hpp"

namespace tpwave {

/// How the forcing of a manufactured pair is computed.
enum class ForcingRoute {
  Analytic,  // closed-form derivatives sampled on the grid
  Spectral,  // spectral operators applied to the sampled solution
};

struct ManufacturedPair {
  Field forcing;
  Field solution;
};

/// f = d_t^2 u - Lap u - lambda d_t Lap u for a closed-form u.
ManufacturedPair manufactured_linear(const ClosedForm& u, const ModelParams& params, const GridSpec& grid,
                                     ForcingRoute route = ForcingRoute::Analytic);

/// f = (linear operator) u - d_t(gamma u_t^2 + |grad u|^2).
ManufacturedPair manufactured_kuznetsov(const ClosedForm& u, const ModelParams& params, const GridSpec& grid,
                                        ForcingRoute route = ForcingRoute::Analytic);

}  // namespace tpwave
