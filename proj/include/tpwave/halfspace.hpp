#pragma once

#include <optional>

#include "tpwave/field.hpp"
#include "tpwave/linear_solver.hpp"
#include "tpwave/model.hpp"

namespace tpwave {

/// Samples on the closed half-box x3 in [0, box_len/2]: planes l = 0..n_x/2.
struct HalfField {
  GridSpec grid;
  std::vector<double> samples;

  int planes() const { return grid.n_x / 2 + 1; }
  std::size_t index(int a, int i, int j, int l) const {
    return ((std::size_t(a) * grid.n_x + i) * grid.n_x + j) * planes() + l;
  }
  double at(int a, int i, int j, int l) const { return samples[index(a, i, j, l)]; }
  double max_abs() const;
};

HalfField restrict_half(const Field& f);

/// What odd reflection does with non-zero samples on the wall x3 = 0.
enum class WallPolicy {
  Strict,     // throw OddIncompatible above kOddWallTolerance relative
  ForceZero,  // overwrite with zero
};

inline constexpr double kOddWallTolerance = 1e-10;

/// f(-x3) = -f(x3) on the lattice. The wall plane and the far plane
/// x3 = box_len/2 are set to zero.
Field reflect_odd(const HalfField& h, WallPolicy policy = WallPolicy::Strict);
/// f(-x3) = f(x3) on the lattice.
Field reflect_even(const HalfField& h);

inline Field reflect_odd(const Field& f, WallPolicy policy = WallPolicy::Strict) {
  return reflect_odd(restrict_half(f), policy);
}
inline Field reflect_even(const Field& f) { return reflect_even(restrict_half(f)); }

/// u on the plane x3 = 0.
BoundaryField trace_dirichlet(const Field& u);
/// -d3 u on the plane x3 = 0 (outward normal -e3), derivative taken spectrally.
BoundaryField trace_neumann(const Field& u);
BoundaryField trace(const Field& u, BoundaryKind bc);

/// Space-time integral of f over the domain plus that of g over the wall,
/// trapezoid weights in x3 on the half-box. For the periodic box g is ignored.
double neumann_compatibility(const Field& f, const std::optional<BoundaryField>& g, Domain domain);
/// 1e-8 (||f||_1 + ||g||_1), space-time integrals over the same sets.
double neumann_compatibility_threshold(const Field& f, const std::optional<BoundaryField>& g, Domain domain);

/// Smooth bump exp(1 - 1/(1 - (s/width)^2)) for |s| < width, else 0.
/// Equals 1 with zero derivative at s = 0.
double bump(double s, double width);

/// Extension G with trace g: g psi(x3) for Dirichlet with psi = bump of width
/// box_len/4 in the signed coordinate x3; -g sin(w x3)/w for Neumann, w the
/// spatial fundamental.
Field lift_boundary_data(const BoundaryField& g, BoundaryKind bc);

/// g = amplitude cos(k t) cos(xi' . x') with k = time_mode 2 pi / period and
/// xi' = (m1, m2) 2 pi / box_len.
BoundaryField separable_boundary_data(const GridSpec& grid, double amplitude, int time_mode, int m1, int m2);

struct HalfSpaceOptions {
  /// Applied to the caller's forcing under Dirichlet conditions. Internally
  /// generated forcings (lifted or nonlinear) always use ForceZero.
  WallPolicy forcing_policy = WallPolicy::Strict;
  /// Neumann compatibility test on (f, g). Sub-solves of a problem that was
  /// already checked turn it off: their data can be pure round-off.
  bool check_compatibility = true;
};

/// Linear solve on x3 > 0 by lifting and reflection. The returned fields are
/// full-box; only x3 in [0, box_len/2] is meaningful. residual_norm is the L2
/// norm of A u_p - P_perp f over the open half-box.
LinearSolveResult solve_halfspace(const ProblemSpec& spec, const HalfSpaceOptions& opts = {});

/// Boundary extension used by solve_halfspace: the caller's G, or a lift of g.
/// Throws ExtensionTraceMismatch when both are given and disagree beyond 1e-8.
std::optional<Field> resolve_extension(const ProblemSpec& spec);

inline constexpr double kExtensionTraceTolerance = 1e-8;
inline constexpr double kCompatibilityTolerance = 1e-8;

}  // namespace tpwave
