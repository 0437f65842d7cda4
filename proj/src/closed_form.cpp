#include "tpwave/closed_form.hpp"

#include <cmath>
#include <numbers>

namespace tpwave {

namespace {

double cos_derivative(double s, int order, double omega, double phase) {
  return std::pow(omega, order) * std::cos(omega * s + phase + order * std::numbers::pi / 2.0);
}

double gauss_derivative(double s, int order, double center, double sigma, double length) {
  double d = s - center;
  d -= length * std::round(d / length);
  const double y = d / sigma;
  const double g = std::exp(-0.5 * y * y);
  switch (order) {
    case 0: return g;
    case 1: return -y / sigma * g;
    case 2: return (y * y - 1.0) / (sigma * sigma) * g;
    case 3: return (3.0 * y - y * y * y) / (sigma * sigma * sigma) * g;
    default: {
      // Hermite recurrence: He_{n+1}(y) = y He_n(y) - n He_{n-1}(y).
      double hm = 1.0, h = y;
      for (int n = 1; n < order; ++n) {
        const double next = y * h - n * hm;
        hm = h;
        h = next;
      }
      const double sign = order % 2 ? -1.0 : 1.0;
      return sign * h / std::pow(sigma, order) * g;
    }
  }
}

}  // namespace

double Factor::eval(double s, int order, double length) const {
  const double omega = mode * 2.0 * std::numbers::pi / length;
  switch (kind) {
    case Kind::Const: return order == 0 ? 1.0 : 0.0;
    case Kind::Cos: return cos_derivative(s, order, omega, phase);
    case Kind::Gauss: return gauss_derivative(s, order, center, sigma, length);
    case Kind::GaussCos: {
      double acc = 0.0;
      double binom = 1.0;
      for (int k = 0; k <= order; ++k) {
        acc += binom * gauss_derivative(s, k, center, sigma, length) * cos_derivative(s, order - k, omega, phase);
        binom = binom * (order - k) / (k + 1);
      }
      return acc;
    }
  }
  return 0.0;
}

Field ClosedForm::sample(const GridSpec& g, const DerivativeOrder& d) const {
  std::vector<double> out(g.size(), 0.0);
  std::vector<double> ft(g.n_t), f1(g.n_x), f2(g.n_x), f3(g.n_x);
  for (const auto& term : terms) {
    for (int a = 0; a < g.n_t; ++a) ft[a] = term.t.eval(g.t(a), d.t, g.period);
    for (int i = 0; i < g.n_x; ++i) {
      f1[i] = term.x1.eval(g.x(i), d.x[0], g.box_len);
      f2[i] = term.x2.eval(g.x(i), d.x[1], g.box_len);
      f3[i] = term.x3.eval(g.x(i), d.x[2], g.box_len);
    }
    const int nt = g.n_t;
#pragma omp parallel for schedule(static)
    for (int a = 0; a < nt; ++a)
      for (int i = 0; i < g.n_x; ++i)
        for (int j = 0; j < g.n_x; ++j) {
          const double c = term.amplitude * ft[a] * f1[i] * f2[j];
          for (int l = 0; l < g.n_x; ++l) out[g.index(a, i, j, l)] += c * f3[l];
        }
  }
  return Field(g, std::move(out));
}

}  // namespace tpwave
