#include "tpwave/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace tpwave::kernels {

namespace {

inline double abs_pow(double v, double p) {
  const double a = std::abs(v);
  if (p == 2.0) return a * a;
  if (p == 1.0) return a;
  return std::pow(a, p);
}

}  // namespace

namespace serial {

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) {
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a * x[n] + b * y[n];
}

void multiply(std::span<const double> x, std::span<const double> y, std::span<double> out) {
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = x[n] * y[n];
}

void time_mean(const GridSpec& g, std::span<const double> in, std::span<double> plane) {
  const std::size_t ps = g.plane_size();
  for (std::size_t s = 0; s < ps; ++s) {
    double acc = 0.0;
    for (int a = 0; a < g.n_t; ++a) acc += in[a * ps + s];
    plane[s] = acc / g.n_t;
  }
}

double power_sum(std::span<const double> x, double p) {
  double acc = 0.0;
  for (double v : x) acc += abs_pow(v, p);
  return acc;
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace serial

namespace omp {

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) out[k] = a * x[k] + b * y[k];
}

void multiply(std::span<const double> x, std::span<const double> y, std::span<double> out) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) out[k] = x[k] * y[k];
}

void time_mean(const GridSpec& g, std::span<const double> in, std::span<double> plane) {
  const std::ptrdiff_t ps = static_cast<std::ptrdiff_t>(g.plane_size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t s = 0; s < ps; ++s) {
    double acc = 0.0;
    for (int a = 0; a < g.n_t; ++a) acc += in[a * ps + s];
    plane[s] = acc / g.n_t;
  }
}

double power_sum(std::span<const double> x, double p) {
  const std::size_t nblocks = (x.size() + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(nblocks, 0.0);
  const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(nblocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nb; ++b) {
    const std::size_t lo = b * kReductionBlock;
    const std::size_t hi = std::min(x.size(), lo + kReductionBlock);
    double acc = 0.0;
    for (std::size_t k = lo; k < hi; ++k) acc += abs_pow(x[k], p);
    partial[b] = acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) m = std::max(m, std::abs(x[k]));
  return m;
}

}  // namespace omp

void set_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

int threads() { return omp_get_max_threads(); }

}  // namespace tpwave::kernels
