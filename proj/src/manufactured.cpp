#include "tpwave/manufactured.hpp"

#include "tpwave/kuznetsov.hpp"

namespace tpwave {

namespace {

DerivativeOrder order(int t, int a, int b, int c) { return {t, {a, b, c}}; }

Field analytic_linear(const ClosedForm& u, double lambda, const GridSpec& g) {
  Field lap = u.sample(g, order(0, 2, 0, 0)) + u.sample(g, order(0, 0, 2, 0)) + u.sample(g, order(0, 0, 0, 2));
  Field lap_t = u.sample(g, order(1, 2, 0, 0)) + u.sample(g, order(1, 0, 2, 0)) + u.sample(g, order(1, 0, 0, 2));
  return u.sample(g, order(2, 0, 0, 0)) - lap - lambda * lap_t;
}

Field analytic_nonlinearity(const ClosedForm& u, double gamma, const GridSpec& g) {
  Field out = (2.0 * gamma) * pointwise_product(u.sample(g, order(1, 0, 0, 0)), u.sample(g, order(2, 0, 0, 0)));
  for (int j = 0; j < 3; ++j) {
    DerivativeOrder dx{0, {0, 0, 0}}, dxt{1, {0, 0, 0}};
    dx.x[j] = 1;
    dxt.x[j] = 1;
    out = out + 2.0 * pointwise_product(u.sample(g, dx), u.sample(g, dxt));
  }
  return out;
}

}  // namespace

ManufacturedPair manufactured_linear(const ClosedForm& u, const ModelParams& params, const GridSpec& grid,
                                     ForcingRoute route) {
  params.validate(grid);
  ManufacturedPair p;
  p.solution = u.sample(grid);
  p.forcing = route == ForcingRoute::Analytic ? analytic_linear(u, params.lambda, grid)
                                              : damped_wave_operator(p.solution, params.lambda);
  return p;
}

ManufacturedPair manufactured_kuznetsov(const ClosedForm& u, const ModelParams& params, const GridSpec& grid,
                                        ForcingRoute route) {
  params.validate(grid);
  ManufacturedPair p;
  p.solution = u.sample(grid);
  if (route == ForcingRoute::Analytic) {
    p.forcing = analytic_linear(u, params.lambda, grid) - analytic_nonlinearity(u, params.gamma, grid);
  } else {
    p.forcing = damped_wave_operator(p.solution, params.lambda) - nonlinearity(p.solution, params.gamma);
  }
  return p;
}

}  // namespace tpwave
