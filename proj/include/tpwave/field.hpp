#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "tpwave/grid.hpp"

namespace tpwave {

using cplx = std::complex<double>;

/// Fourier coefficients of a real space-time field.
///
/// Only the half spectrum k3 in [0, n_x/2] is stored (r2c layout). The
/// signed-mode accessors expose the full Hermitian-symmetric view
/// u(-k, -xi) = conj(u(k, xi)).
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(const GridSpec& grid);

  const GridSpec& grid() const { return grid_; }
  std::span<cplx> data() { return coeffs_; }
  std::span<const cplx> data() const { return coeffs_; }

  cplx& stored(int a, int i, int j, int l) { return coeffs_[grid_.spectral_index(a, i, j, l)]; }
  cplx stored(int a, int i, int j, int l) const { return coeffs_[grid_.spectral_index(a, i, j, l)]; }

  /// Coefficient of exp(i(k t + xi.x)) for signed mode numbers.
  cplx coefficient(int kt, int k1, int k2, int k3) const;

  /// Writes value at the signed mode; negative k3 writes conj(value) into
  /// the stored partner. Planes k3 = 0 and k3 = n_x/2 hold both partners,
  /// so callers setting a Hermitian pair there must set both.
  void set_mode(int kt, int k1, int k2, int k3, cplx value);

  double max_abs() const;

  /// Largest |c(m) - conj(c(-m))| over the self-redundant planes.
  double hermitian_defect() const;

 private:
  GridSpec grid_{};
  std::vector<cplx> coeffs_;
};

/// Real samples on a GridSpec with a lazily cached spectral view.
///
/// Fields are immutable; copies share both the samples and the cache.
class Field {
 public:
  Field() = default;
  Field(const GridSpec& grid, std::vector<double> samples);

  static Field zeros(const GridSpec& grid);
  static Field constant(const GridSpec& grid, double value);
  static Field from_function(const GridSpec& grid,
                             const std::function<double(double, double, double, double)>& fn);

  const GridSpec& grid() const { return grid_; }
  std::span<const double> samples() const { return *samples_; }
  double at(int a, int i, int j, int l) const { return (*samples_)[grid_.index(a, i, j, l)]; }
  std::size_t size() const { return samples_ ? samples_->size() : 0; }

  const Spectrum& spectrum() const;

  double max_abs() const;

 private:
  struct Cache {
    std::once_flag once;
    std::shared_ptr<const Spectrum> spectrum;
  };

  GridSpec grid_{};
  std::shared_ptr<const std::vector<double>> samples_;
  std::shared_ptr<Cache> cache_;
};

/// Arithmetic helpers that build new fields.
Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double s, const Field& a);
Field pointwise_product(const Field& a, const Field& b);

/// Max-norm relative difference max|a - b| / max(max|b|, floor).
double max_rel_diff(const Field& a, const Field& b, double floor = 1e-300);

}  // namespace tpwave
