#pragma once

#include <optional>

#include "tpwave/field.hpp"

namespace tpwave {

struct ModelParams {
  double lambda = 1.0;  // Kelvin-Voigt damping
  double gamma = 1.0;   // Kuznetsov nonlinearity
  double period = 1.0;

  void validate() const;
  /// Also checks period against the grid.
  void validate(const GridSpec& grid) const;
};

enum class Domain { PeriodicBox, HalfSpace };
enum class BoundaryKind { None, Dirichlet, Neumann };

/// Boundary samples on the plane x3 = 0: n_t x n_x x n_x, row-major (t, x1, x2).
struct BoundaryField {
  GridSpec grid;
  std::vector<double> samples;

  static BoundaryField zeros(const GridSpec& grid) { return {grid, std::vector<double>(std::size_t(grid.n_t) * grid.n_x * grid.n_x)}; }
  double at(int a, int i, int j) const { return samples[(std::size_t(a) * grid.n_x + i) * grid.n_x + j]; }
  double max_abs() const;
};

/// A linear or nonlinear time-periodic problem.
///
/// Half-space data are carried as full-box fields; only the samples with
/// x3 in [0, box_len/2] are read. The boundary extension G, when present,
/// is a smooth full-box field whose trace realizes the boundary data.
struct ProblemSpec {
  Domain domain = Domain::PeriodicBox;
  BoundaryKind bc = BoundaryKind::None;
  ModelParams params;
  GridSpec grid;
  Field forcing;
  std::optional<Field> boundary_ext;
  std::optional<BoundaryField> boundary_data;

  void validate() const;
};

struct SolutionDecomposition {
  Field steady;    // u_s, constant in t
  Field periodic;  // u_p, zero time mean

  Field total() const { return steady + periodic; }
};

}  // namespace tpwave
