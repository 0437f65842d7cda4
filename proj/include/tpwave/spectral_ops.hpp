#pragma once

#include <array>

#include "tpwave/field.hpp"
#include "tpwave/kernels.hpp"
#include "tpwave/transform.hpp"

namespace tpwave {

/// Multiplies the spectrum of f by symbol(k, xi1, xi2, xi3) and returns the
/// real field. Modes with a Nyquist component use the Hermitian-consistent
/// symbol (see kernels::hermitian_symbol), which equals taking the real
/// part of the complex result.
template <class Symbol>
Field apply_symbol(const Field& f, Symbol&& symbol) {
  Spectrum s = f.spectrum();
  kernels::omp::apply_symbol(f.grid(), s.data(), symbol);
  return detail::synthesize(s);
}

/// Partial derivative orders in (t, x1, x2, x3).
struct DerivativeOrder {
  int t = 0;
  std::array<int, 3> x{0, 0, 0};
};

cplx derivative_symbol(const DerivativeOrder& d, double k, double xi1, double xi2, double xi3);

/// Exact spectral derivative: multiplication by (ik)^t (i xi_1)^x1 ...
Field derivative(const Field& f, const DerivativeOrder& d);

inline Field d_t(const Field& f, int order = 1) { return derivative(f, {order, {0, 0, 0}}); }
inline Field d_x(const Field& f, int axis, int order = 1) {
  DerivativeOrder d;
  d.x[axis] = order;
  return derivative(f, d);
}

Field laplacian(const Field& f);

/// Symbol of the damped wave operator d_t^2 - Lap - lambda d_t Lap:
/// |xi|^2 - k^2 + i lambda k |xi|^2.
inline cplx damped_wave_symbol(double lambda, double k, double xi1, double xi2, double xi3) {
  const double q = xi1 * xi1 + xi2 * xi2 + xi3 * xi3;
  return {q - k * k, lambda * k * q};
}

/// Applies d_t^2 u - Lap u - lambda d_t Lap u spectrally.
Field damped_wave_operator(const Field& u, double lambda);

enum class Dealias { TwoThirds, None };

/// Largest retained |mode| under the 2/3 rule: 3 * cutoff < n.
constexpr int dealias_cutoff(int n) { return (n - 1) / 3; }

/// Zeroes every mode with |mode| > dealias_cutoff on any axis (time included).
Field dealias(const Field& f);

inline Field maybe_dealias(const Field& f, Dealias d) { return d == Dealias::TwoThirds ? dealias(f) : f; }

}  // namespace tpwave
