#pragma once

#include <cmath>
#include <numbers>

#include "tpwave/field.hpp"

namespace testutil {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline tpwave::GridSpec grid(int n_t, int n_x, double L = kTwoPi, double tau = kTwoPi) {
  return {n_t, n_x, L, tau};
}

inline double max_abs_diff(const tpwave::Field& a, const tpwave::Field& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a.samples()[k] - b.samples()[k]));
  return m;
}

}  // namespace testutil
