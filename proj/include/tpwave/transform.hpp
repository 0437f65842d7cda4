#pragma once

#include "tpwave/field.hpp"

namespace tpwave {

/// Coefficients with averaged measures in time and space: a unit exponential
/// exp(i(k t + xi.x)) has coefficient exactly 1. Discretely
/// c = (1 / (n_t n_x^3)) sum samples * exp(-i(...)).
Spectrum forward_transform(const Field& f);

/// Exact inverse of forward_transform. Throws Error(NonHermitianInput) when
/// the coefficients violate Hermitian symmetry by more than 1e-10 relative
/// to the largest coefficient.
Field inverse_transform(const Spectrum& coeffs);

/// Relative tolerance used by inverse_transform.
inline constexpr double kHermitianTolerance = 1e-10;

namespace detail {
/// Uncached forward FFT used by Field::spectrum().
Spectrum compute_forward(const Field& f);
/// Inverse without the symmetry check; only for spectra produced by
/// Hermitian-consistent multipliers.
Field synthesize(const Spectrum& coeffs);
/// Averaged 3D transform of an n_t x n_x x n_x plane in (t, x1, x2), half
/// spectrum in x2: n_t x n_x x (n_x/2 + 1).
std::vector<cplx> plane_forward(const GridSpec& g, std::span<const double> plane);
}  // namespace detail

}  // namespace tpwave
