#include "tpwave/field.hpp"

#include <algorithm>
#include <cmath>

#include "tpwave/errors.hpp"
#include "tpwave/kernels.hpp"
#include "tpwave/transform.hpp"

namespace tpwave {

Spectrum::Spectrum(const GridSpec& grid) : grid_(grid), coeffs_(grid.spectral_size()) {}

cplx Spectrum::coefficient(int kt, int k1, int k2, int k3) const {
  const int a = mode_index(kt, grid_.n_t);
  const int i = mode_index(k1, grid_.n_x);
  const int j = mode_index(k2, grid_.n_x);
  const int l = mode_index(k3, grid_.n_x);
  if (l < grid_.n_half()) return stored(a, i, j, l);
  return std::conj(stored(mode_index(-kt, grid_.n_t), mode_index(-k1, grid_.n_x),
                          mode_index(-k2, grid_.n_x), grid_.n_x - l));
}

void Spectrum::set_mode(int kt, int k1, int k2, int k3, cplx value) {
  const int l = mode_index(k3, grid_.n_x);
  if (l < grid_.n_half()) {
    stored(mode_index(kt, grid_.n_t), mode_index(k1, grid_.n_x), mode_index(k2, grid_.n_x), l) = value;
  } else {
    stored(mode_index(-kt, grid_.n_t), mode_index(-k1, grid_.n_x), mode_index(-k2, grid_.n_x),
           grid_.n_x - l) = std::conj(value);
  }
}

double Spectrum::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double Spectrum::hermitian_defect() const {
  double worst = 0.0;
  const int nt = grid_.n_t;
  const int nx = grid_.n_x;
  for (int l : {0, nx / 2}) {
    for (int a = 0; a < nt; ++a)
      for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nx; ++j) {
          const cplx c = stored(a, i, j, l);
          const cplx p = stored((nt - a) % nt, (nx - i) % nx, (nx - j) % nx, l);
          worst = std::max(worst, std::abs(c - std::conj(p)));
        }
  }
  return worst;
}

Field::Field(const GridSpec& grid, std::vector<double> samples)
    : grid_(grid),
      samples_(std::make_shared<const std::vector<double>>(std::move(samples))),
      cache_(std::make_shared<Cache>()) {
  grid_.validate();
  if (samples_->size() != grid_.size()) {
    throw Error(ErrorKind::InvalidArgument, "sample count does not match grid");
  }
}

Field Field::zeros(const GridSpec& grid) { return Field(grid, std::vector<double>(grid.size(), 0.0)); }

Field Field::constant(const GridSpec& grid, double value) {
  return Field(grid, std::vector<double>(grid.size(), value));
}

Field Field::from_function(const GridSpec& grid,
                           const std::function<double(double, double, double, double)>& fn) {
  grid.validate();
  std::vector<double> s(grid.size());
  for (int a = 0; a < grid.n_t; ++a)
    for (int i = 0; i < grid.n_x; ++i)
      for (int j = 0; j < grid.n_x; ++j)
        for (int l = 0; l < grid.n_x; ++l)
          s[grid.index(a, i, j, l)] = fn(grid.t(a), grid.x(i), grid.x(j), grid.x(l));
  return Field(grid, std::move(s));
}

const Spectrum& Field::spectrum() const {
  std::call_once(cache_->once, [this] {
    cache_->spectrum = std::make_shared<const Spectrum>(detail::compute_forward(*this));
  });
  return *cache_->spectrum;
}

double Field::max_abs() const { return kernels::omp::max_abs(samples()); }

namespace {

void require_same_grid(const Field& a, const Field& b) {
  if (!(a.grid() == b.grid())) throw Error(ErrorKind::InvalidArgument, "fields live on different grids");
}

}  // namespace

Field operator+(const Field& a, const Field& b) {
  require_same_grid(a, b);
  std::vector<double> out(a.size());
  kernels::omp::axpby(1.0, a.samples(), 1.0, b.samples(), out);
  return Field(a.grid(), std::move(out));
}

Field operator-(const Field& a, const Field& b) {
  require_same_grid(a, b);
  std::vector<double> out(a.size());
  kernels::omp::axpby(1.0, a.samples(), -1.0, b.samples(), out);
  return Field(a.grid(), std::move(out));
}

Field operator*(double s, const Field& a) {
  std::vector<double> out(a.size());
  kernels::omp::axpby(s, a.samples(), 0.0, a.samples(), out);
  return Field(a.grid(), std::move(out));
}

Field pointwise_product(const Field& a, const Field& b) {
  require_same_grid(a, b);
  std::vector<double> out(a.size());
  kernels::omp::multiply(a.samples(), b.samples(), out);
  return Field(a.grid(), std::move(out));
}

double max_rel_diff(const Field& a, const Field& b, double floor) {
  require_same_grid(a, b);
  double num = 0.0;
  const auto sa = a.samples();
  const auto sb = b.samples();
  for (std::size_t k = 0; k < sa.size(); ++k) num = std::max(num, std::abs(sa[k] - sb[k]));
  return num / std::max(b.max_abs(), floor);
}

}  // namespace tpwave
