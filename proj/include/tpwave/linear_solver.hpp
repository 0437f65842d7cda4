#pragma once

#include "tpwave/model.hpp"

namespace tpwave {

struct LinearSolveOptions {
  /// Subtract a non-zero spatial mean of P f instead of failing, recording
  /// its magnitude in steady_zero_mode_dropped.
  bool drop_zero_mode = false;
};

struct LinearSolveResult {
  SolutionDecomposition decomposition;
  double residual_norm = 0.0;  // L2 of A u_p - P_perp f over the domain
  double trace_error = 0.0;    // max boundary-condition violation
  double steady_zero_mode_dropped = 0.0;
};

/// -Lap u_s = pf on the box with the constant pinned to zero. pf must be
/// constant in t; throws Error(MeanNotZero) when its spatial mean exceeds
/// 1e-10 of max(its RMS, reference_rms).
Field solve_steady(const Field& pf, double reference_rms = 0.0);

/// u_p = F^{-1}[M F[ppf]]. Throws Error(NotMeanFree) when P ppf exceeds
/// 1e-10 relative.
Field solve_periodic(const Field& ppf, const ModelParams& params);

/// Splits f = P f + P_perp f and solves both parts on the periodic box.
LinearSolveResult solve_box(const Field& f, const ModelParams& params, const LinearSolveOptions& opts = {});

inline constexpr double kMeanTolerance = 1e-10;

}  // namespace tpwave
