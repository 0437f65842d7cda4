#pragma once

#include <cstddef>
#include <numbers>

namespace tpwave {

/// Discretization of the space-time torus [0, period) x [0, box_len)^3.
///
/// Samples are laid out row-major in (t, x1, x2, x3). Frequencies follow FFT
/// order: index i in [0, n) maps to the signed integer i for i <= n/2 and
/// i - n otherwise, so the Nyquist index n/2 carries the positive frequency.
struct GridSpec {
  int n_t = 0;
  int n_x = 0;
  double box_len = 0.0;
  double period = 0.0;

  /// Throws Error(InvalidGrid) unless n_t, n_x are even and >= 4 and the
  /// lengths are positive and finite.
  void validate() const;

  std::size_t plane_size() const { return std::size_t(n_x) * n_x * n_x; }
  std::size_t size() const { return std::size_t(n_t) * plane_size(); }
  int n_half() const { return n_x / 2 + 1; }
  std::size_t spectral_plane_size() const { return std::size_t(n_x) * n_x * n_half(); }
  std::size_t spectral_size() const { return std::size_t(n_t) * spectral_plane_size(); }

  std::size_t index(int a, int i, int j, int l) const {
    return ((std::size_t(a) * n_x + i) * n_x + j) * n_x + l;
  }
  std::size_t spectral_index(int a, int i, int j, int l) const {
    return ((std::size_t(a) * n_x + i) * n_x + j) * n_half() + l;
  }

  double dt() const { return period / n_t; }
  double dx() const { return box_len / n_x; }
  double cell_volume() const { return dx() * dx() * dx(); }
  double box_volume() const { return box_len * box_len * box_len; }
  double time_fundamental() const { return 2.0 * std::numbers::pi / period; }
  double space_fundamental() const { return 2.0 * std::numbers::pi / box_len; }

  double t(int a) const { return a * dt(); }
  double x(int i) const { return i * dx(); }

  /// Angular frequency k of time index a.
  double time_freq(int a) const;
  /// Angular wavenumber xi_j of spatial index i.
  double space_freq(int i) const;

  bool operator==(const GridSpec&) const = default;
};

/// FFT-order index -> signed mode number in {-n/2+1, ..., n/2}.
constexpr int signed_mode(int idx, int n) { return idx <= n / 2 ? idx : idx - n; }

/// Signed mode number -> storage index in [0, n).
constexpr int mode_index(int mode, int n) { return ((mode % n) + n) % n; }

}  // namespace tpwave
