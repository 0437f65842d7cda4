#pragma once

#include <vector>

#include "tpwave/field.hpp"
#include "tpwave/spectral_ops.hpp"

namespace tpwave {

/// One-dimensional factor with analytic derivatives. Modes are integer
/// multiples of the axis fundamental (2 pi / period or 2 pi / box_len);
/// center and sigma are in physical units.
struct Factor {
  enum class Kind { Const, Cos, Gauss, GaussCos };
  Kind kind = Kind::Const;
  double mode = 0.0;
  double phase = 0.0;
  double center = 0.0;
  double sigma = 1.0;

  static Factor constant() { return {}; }
  static Factor cos(double mode, double phase = 0.0) { return {Kind::Cos, mode, phase, 0.0, 1.0}; }
  static Factor gauss(double center, double sigma) { return {Kind::Gauss, 0.0, 0.0, center, sigma}; }
  static Factor gauss_cos(double center, double sigma, double mode, double phase = 0.0) {
    return {Kind::GaussCos, mode, phase, center, sigma};
  }

  /// d^order/ds^order at s on an axis of length `length`. Gaussians use the
  /// nearest periodic image of the center.
  double eval(double s, int order, double length) const;

  bool operator==(const Factor&) const = default;
};

/// amplitude * t(t) * x1(x1) * x2(x2) * x3(x3).
struct SeparableTerm {
  double amplitude = 1.0;
  Factor t, x1, x2, x3;

  bool operator==(const SeparableTerm&) const = default;
};

struct ClosedForm {
  std::vector<SeparableTerm> terms;

  /// Samples the analytic derivative d on the grid.
  Field sample(const GridSpec& grid, const DerivativeOrder& d = {}) const;

  bool operator==(const ClosedForm&) const = default;
};

}  // namespace tpwave
