#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpwave/model.hpp"
#include "tpwave/spectral_ops.hpp"

namespace tpwave {

struct FixedPointConfig {
  double rho = 1.0;      // ball radius; also the divergence guard
  double tol = 1e-12;    // on ||u^{n+1} - u^n||_SolS,p (absolute)
  int max_iter = 50;
  double p = 2.75;       // in (5/2, 3)
  Dealias dealias = Dealias::TwoThirds;
  bool auto_scale = false;  // rescale f, g so that ||f||_p + ||g|| = rho^2
  bool strict_p = true;     // false lets p leave (5/2, 3) with a warning

  /// Throws InvalidArgument. Returns a warning when strict_p is off and p
  /// is outside (5/2, 3).
  std::string validate() const;

  bool operator==(const FixedPointConfig&) const = default;
};

enum class IterationStatus { Converged, MaxIter, Diverged };

std::string_view to_string(IterationStatus s);

struct IterationRecord {
  int iteration = 0;
  double diff_norm = 0.0;     // ||u^{n+1} - u^n||_SolS,p
  double iterate_norm = 0.0;  // ||u^{n+1}||_SolS,p
  double residual = 0.0;      // L2 of the full equation
  double ratio = 0.0;         // diff_norm / previous diff_norm, 0 on the first step
};

struct IterationTrace {
  std::vector<IterationRecord> records;
  IterationStatus status = IterationStatus::MaxIter;
  double final_residual = 0.0;
  double data_scale = 1.0;  // factor applied to f and g by auto_scale
  std::string warning;

  /// Largest ratio from the second step on; 0 with fewer than two steps.
  double max_ratio() const;
};

struct KuznetsovResult {
  SolutionDecomposition decomposition;
  IterationTrace trace;
};

/// gamma (d_t u)^2 + |grad u|^2, factors and product truncated per dealias.
Field kuznetsov_flux(const Field& u, double gamma, Dealias dealias = Dealias::TwoThirds);

/// d_t(gamma (d_t u)^2 + |grad u|^2) = 2 gamma u_t u_tt + 2 grad u . grad u_t,
/// evaluated pointwise from spectral derivatives.
Field nonlinearity(const Field& u, double gamma, Dealias dealias = Dealias::TwoThirds);

/// 2 grad u_s . grad d_t u_p.
Field coupling_term(const Field& u_s, const Field& u_p, Dealias dealias = Dealias::TwoThirds);

/// One application of the fixed-point map: the linear solve of
/// P_perp(nonlinearity(u_p) + coupling_term(u_s, u_p) + ppf) with boundary
/// extension ppg_ext on the half-space.
Field picard_step(const Field& u_p, const Field& u_s, const Field& ppf, const std::optional<Field>& ppg_ext,
                  const ProblemSpec& spec, const FixedPointConfig& config);

KuznetsovResult solve_kuznetsov(const ProblemSpec& spec, const FixedPointConfig& config);

/// L2 norm of A u - nonlinearity(u) - f over the box (or the open half-box).
double kuznetsov_residual(const SolutionDecomposition& u, const ProblemSpec& spec,
                          Dealias dealias = Dealias::TwoThirds);

}  // namespace tpwave
