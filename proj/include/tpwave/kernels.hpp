#pragma once

// Data-parallel inner loops. Every kernel exists twice: `serial` is the
// plain reference loop kept for testing, `omp` is the OpenMP version used by
// the library. Reductions in `omp` sum fixed-size blocks and then combine the
// block partials in index order, so results do not depend on thread count.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "tpwave/grid.hpp"

namespace tpwave::kernels {

using cplx = std::complex<double>;

/// Block length for deterministic reductions.
inline constexpr std::size_t kReductionBlock = 1u << 14;

/// Symbol value on a mode with a Nyquist component, made Hermitian-consistent:
/// the average of S(s) and conj(S(partner)), where the partner keeps Nyquist
/// components and negates the others. Equals S(s) when S(-s) = conj(S(s))
/// and no component is Nyquist.
template <class Symbol>
inline cplx hermitian_symbol(const GridSpec& g, int a, int i, int j, int l, Symbol&& symbol) {
  const double k = g.time_freq(a);
  const double x1 = g.space_freq(i);
  const double x2 = g.space_freq(j);
  const double x3 = g.space_freq(l);
  const bool nyq_t = 2 * a == g.n_t;
  const bool nyq_1 = 2 * i == g.n_x;
  const bool nyq_2 = 2 * j == g.n_x;
  const bool nyq_3 = 2 * l == g.n_x;
  const cplx s = symbol(k, x1, x2, x3);
  if (!(nyq_t || nyq_1 || nyq_2 || nyq_3)) return s;
  const cplx partner = symbol(nyq_t ? k : -k, nyq_1 ? x1 : -x1, nyq_2 ? x2 : -x2, nyq_3 ? x3 : -x3);
  return 0.5 * (s + std::conj(partner));
}

/// Frequencies and Nyquist flags per axis, so symbol sweeps avoid
/// recomputing them per coefficient.
struct FrequencyTables {
  std::vector<double> t, x;
  std::vector<char> nyq_t, nyq_x;

  explicit FrequencyTables(const GridSpec& g) : t(g.n_t), x(g.n_x), nyq_t(g.n_t), nyq_x(g.n_x) {
    for (int a = 0; a < g.n_t; ++a) {
      t[a] = g.time_freq(a);
      nyq_t[a] = 2 * a == g.n_t;
    }
    for (int i = 0; i < g.n_x; ++i) {
      x[i] = g.space_freq(i);
      nyq_x[i] = 2 * i == g.n_x;
    }
  }
};

/// Applies symbol to the n_half coefficients of one (a, i, j) row.
template <class Symbol>
void apply_symbol_row(const FrequencyTables& f, int nh, int a, int i, int j, cplx* row, Symbol& symbol) {
  const double k = f.t[a], x1 = f.x[i], x2 = f.x[j];
  const bool nyq_row = f.nyq_t[a] || f.nyq_x[i] || f.nyq_x[j];
  for (int l = 0; l < nh; ++l) {
    const double x3 = f.x[l];
    const cplx s = symbol(k, x1, x2, x3);
    if (!(nyq_row || f.nyq_x[l])) {
      row[l] *= s;
      continue;
    }
    const cplx partner = symbol(f.nyq_t[a] ? k : -k, f.nyq_x[i] ? x1 : -x1, f.nyq_x[j] ? x2 : -x2, f.nyq_x[l] ? x3 : -x3);
    row[l] *= 0.5 * (s + std::conj(partner));
  }
}

namespace serial {

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out);
void multiply(std::span<const double> x, std::span<const double> y, std::span<double> out);
void time_mean(const GridSpec& g, std::span<const double> in, std::span<double> plane);
double power_sum(std::span<const double> x, double p);
double max_abs(std::span<const double> x);

template <class Symbol>
void apply_symbol(const GridSpec& g, std::span<cplx> coeffs, Symbol&& symbol) {
  const FrequencyTables f(g);
  const int nh = g.n_half();
  for (int a = 0; a < g.n_t; ++a)
    for (int i = 0; i < g.n_x; ++i)
      for (int j = 0; j < g.n_x; ++j) apply_symbol_row(f, nh, a, i, j, &coeffs[g.spectral_index(a, i, j, 0)], symbol);
}

}  // namespace serial

namespace omp {

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out);
void multiply(std::span<const double> x, std::span<const double> y, std::span<double> out);
void time_mean(const GridSpec& g, std::span<const double> in, std::span<double> plane);
double power_sum(std::span<const double> x, double p);
double max_abs(std::span<const double> x);

template <class Symbol>
void apply_symbol(const GridSpec& g, std::span<cplx> coeffs, Symbol&& symbol) {
  const FrequencyTables f(g);
  const int nh = g.n_half();
  const int rows = g.n_t * g.n_x;
#pragma omp parallel for schedule(static)
  for (int row = 0; row < rows; ++row) {
    const int a = row / g.n_x;
    const int i = row % g.n_x;
    for (int j = 0; j < g.n_x; ++j) apply_symbol_row(f, nh, a, i, j, &coeffs[g.spectral_index(a, i, j, 0)], symbol);
  }
}

}  // namespace omp

/// Sets the OpenMP thread count used by the omp kernels and FFT plans.
void set_threads(int n);
int threads();

}  // namespace tpwave::kernels
