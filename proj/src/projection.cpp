#include "tpwave/projection.hpp"

#include <algorithm>
#include <cmath>

#include "tpwave/kernels.hpp"

namespace tpwave {

std::vector<double> time_average(const Field& f) {
  std::vector<double> plane(f.grid().plane_size());
  kernels::omp::time_mean(f.grid(), f.samples(), plane);
  return plane;
}

Field project_steady(const Field& f) {
  const GridSpec& g = f.grid();
  const auto plane = time_average(f);
  std::vector<double> out(g.size());
  const std::size_t ps = g.plane_size();
  for (int a = 0; a < g.n_t; ++a) std::copy(plane.begin(), plane.end(), out.begin() + a * ps);
  return Field(g, std::move(out));
}

Field project_periodic(const Field& f) {
  const GridSpec& g = f.grid();
  const auto plane = time_average(f);
  const auto s = f.samples();
  std::vector<double> out(g.size());
  const std::size_t ps = g.plane_size();
  const int nt = g.n_t;
#pragma omp parallel for schedule(static)
  for (int a = 0; a < nt; ++a)
    for (std::size_t p = 0; p < ps; ++p) out[a * ps + p] = s[a * ps + p] - plane[p];
  return Field(g, std::move(out));
}

double steady_fraction(const Field& f) {
  const auto plane = time_average(f);
  return kernels::omp::max_abs(plane) / std::max(f.max_abs(), 1e-300);
}

double periodic_fraction(const Field& f) {
  return project_periodic(f).max_abs() / std::max(f.max_abs(), 1e-300);
}

}  // namespace tpwave
