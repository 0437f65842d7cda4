#include "tpwave/spectral_ops.hpp"

#include <cstdlib>

namespace tpwave {

namespace {

cplx ipow(double w, int n) {
  // (i w)^n
  cplx r{1.0, 0.0};
  const cplx iw{0.0, w};
  for (int m = 0; m < n; ++m) r *= iw;
  return r;
}

}  // namespace

cplx derivative_symbol(const DerivativeOrder& d, double k, double xi1, double xi2, double xi3) {
  return ipow(k, d.t) * ipow(xi1, d.x[0]) * ipow(xi2, d.x[1]) * ipow(xi3, d.x[2]);
}

Field derivative(const Field& f, const DerivativeOrder& d) {
  return apply_symbol(f, [&d](double k, double a, double b, double c) {
    return derivative_symbol(d, k, a, b, c);
  });
}

Field laplacian(const Field& f) {
  return apply_symbol(f, [](double, double a, double b, double c) {
    return cplx{-(a * a + b * b + c * c), 0.0};
  });
}

Field damped_wave_operator(const Field& u, double lambda) {
  return apply_symbol(u, [lambda](double k, double a, double b, double c) {
    return damped_wave_symbol(lambda, k, a, b, c);
  });
}

Field dealias(const Field& f) {
  const GridSpec& g = f.grid();
  const int ct = dealias_cutoff(g.n_t);
  const int cx = dealias_cutoff(g.n_x);
  Spectrum s = f.spectrum();
  const int nh = g.n_half();
  auto data = s.data();
  const int rows = g.n_t * g.n_x;
#pragma omp parallel for schedule(static)
  for (int row = 0; row < rows; ++row) {
    const int a = row / g.n_x;
    const int i = row % g.n_x;
    const bool keep_ai = std::abs(signed_mode(a, g.n_t)) <= ct && std::abs(signed_mode(i, g.n_x)) <= cx;
    for (int j = 0; j < g.n_x; ++j)
      for (int l = 0; l < nh; ++l) {
        const bool keep = keep_ai && std::abs(signed_mode(j, g.n_x)) <= cx && l <= cx;
        if (!keep) data[g.spectral_index(a, i, j, l)] = 0.0;
      }
  }
  return detail::synthesize(s);
}

}  // namespace tpwave
