#include "tpwave/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "tpwave/closed_form.hpp"
#include "tpwave/corpus.hpp"
#include "tpwave/errors.hpp"
#include "tpwave/halfspace.hpp"
#include "tpwave/kuznetsov.hpp"
#include "tpwave/linear_solver.hpp"
#include "tpwave/manufactured.hpp"
#include "tpwave/norms.hpp"
#include "tpwave/projection.hpp"

namespace tpwave {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CheckResult check(std::string name, double value, double threshold) {
  return {std::move(name), std::isfinite(value) && value <= threshold, value, threshold};
}

GridSpec standard_grid(int n) { return {n, n, kTwoPi, kTwoPi}; }

ClosedForm travelling_wave(double amplitude) {
  SeparableTerm s{amplitude, Factor::cos(1, -std::numbers::pi / 2), Factor::cos(1), Factor::constant(),
                  Factor::constant()};
  SeparableTerm c{amplitude, Factor::cos(1), Factor::cos(1, -std::numbers::pi / 2), Factor::constant(),
                  Factor::constant()};
  return {{s, c}};  // amplitude sin(t + x1)
}

void linear_suite(std::vector<CheckResult>& out, std::uint64_t seed, int n) {
  const GridSpec g = standard_grid(n);
  const ModelParams params{1.0, 1.0, kTwoPi};

  {
    const auto pair = manufactured_linear(travelling_wave(1.0), params, g);
    const Field u = solve_periodic(pair.forcing, params);
    out.push_back(check("linear.single_mode", max_rel_diff(u, pair.solution), 1e-12));
  }
  {
    const double L = kTwoPi;
    ClosedForm packet{{{1.0, Factor::cos(1, 0.3), Factor::gauss_cos(L / 2, 0.5, 2), Factor::gauss(L / 2, 0.6),
                        Factor::gauss(L / 2, 0.6)},
                       {0.5, Factor::constant(), Factor::gauss(L / 3, 0.6), Factor::gauss(L / 2, 0.6),
                        Factor::gauss(L / 2, 0.6)}}};
    const auto pair = manufactured_linear(packet, params, g, ForcingRoute::Spectral);
    LinearSolveOptions opts;
    const LinearSolveResult r = solve_box(pair.forcing, params, opts);
    // The steady solve pins the spatial mean to zero.
    const Field ps = project_steady(pair.solution);
    const double mean = ps.spectrum().coefficient(0, 0, 0, 0).real();
    const Field expected = pair.solution - Field::constant(g, mean);
    out.push_back(check("linear.wave_packet", max_rel_diff(r.decomposition.total(), expected), 1e-9));
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) {
      CorpusSpec cs;
      cs.seed = seed + k;
      const Field f = random_field(g, cs);
      const Field u = solve_periodic(f, params);
      worst = std::max(worst, max_rel_diff(damped_wave_operator(u, params.lambda), f));
    }
    out.push_back(check("linear.operator_round_trip", worst, 1e-10));
  }
  {
    ProblemSpec spec;
    spec.domain = Domain::HalfSpace;
    spec.bc = BoundaryKind::Dirichlet;
    spec.params = params;
    spec.grid = g;
    spec.forcing = Field::from_function(g, [](double t, double, double, double z) { return std::sin(z) * std::cos(t); });
    const auto r = solve_halfspace(spec);
    const Field u = r.decomposition.total();
    out.push_back(check("linear.dirichlet_trace", r.trace_error / std::max(u.max_abs(), 1e-300), 1e-10));
  }
  {
    ProblemSpec spec;
    spec.domain = Domain::HalfSpace;
    spec.bc = BoundaryKind::Neumann;
    spec.params = params;
    spec.grid = g;
    spec.forcing = Field::from_function(g, [](double t, double, double, double z) { return std::cos(z) * std::cos(t); });
    const auto r = solve_halfspace(spec);
    const Field u = r.decomposition.total();
    const double grad = std::max({d_x(u, 0).max_abs(), d_x(u, 1).max_abs(), d_x(u, 2).max_abs()});
    out.push_back(check("linear.neumann_trace", r.trace_error / std::max(grad, 1e-300), 1e-8));
  }
  {
    ProblemSpec spec;
    spec.domain = Domain::HalfSpace;
    spec.bc = BoundaryKind::Dirichlet;
    spec.params = params;
    spec.grid = g;
    spec.forcing = Field::zeros(g);
    spec.boundary_data = separable_boundary_data(g, 1.0, 1, 1, 0);
    const auto r = solve_halfspace(spec);
    const double scale = lp_norm(damped_wave_operator(*resolve_extension(spec), params.lambda),
                                 NormSpec{2.0, Region::HalfInterior});
    out.push_back(check("linear.dirichlet_lift_residual", r.residual_norm / scale, 1e-9));
    out.push_back(check("linear.dirichlet_lift_trace", r.trace_error, 1e-12));
  }
}

void kuznetsov_suite(std::vector<CheckResult>& out, std::uint64_t seed, int n) {
  const GridSpec g = standard_grid(n);
  const ModelParams params{1.0, 1.0, kTwoPi};
  FixedPointConfig cfg;
  cfg.tol = 1e-14;
  cfg.max_iter = 15;

  {
    const Field u = Field::from_function(g, [](double t, double, double, double) { return std::sin(t); });
    const Field expected = Field::from_function(g, [](double t, double, double, double) { return -std::sin(2 * t); });
    out.push_back(check("kuznetsov.nonlinearity_sin", max_rel_diff(nonlinearity(u, 1.0), expected), 1e-12));
  }
  {
    const auto pair = manufactured_kuznetsov(travelling_wave(1e-3), params, g);
    ProblemSpec spec{Domain::PeriodicBox, BoundaryKind::None, params, g, pair.forcing, {}, {}};
    const auto res = solve_kuznetsov(spec, cfg);
    const double err = sols_norm(res.decomposition.total() - pair.solution, cfg.p) / sols_norm(pair.solution, cfg.p);
    out.push_back(check("kuznetsov.manufactured", err, 1e-7));
    out.push_back(check("kuznetsov.converged", res.trace.status == IterationStatus::Converged ? 0.0 : 1.0, 0.0));
    out.push_back(check("kuznetsov.contraction_ratio", res.trace.max_ratio(), 0.5));
  }
  {
    ProblemSpec spec{Domain::PeriodicBox, BoundaryKind::None, params, g, Field::zeros(g), {}, {}};
    const auto res = solve_kuznetsov(spec, cfg);
    out.push_back(check("kuznetsov.zero_data", double(res.trace.records.size()), 1.0));
  }
  {
    CorpusSpec cs;
    cs.seed = seed;
    cs.amplitude = 1e-3;
    const Field up = random_field(g, cs);
    const Field us = Field::zeros(g);
    const Field step = picard_step(up, us, Field::zeros(g), std::nullopt,
                                   {Domain::PeriodicBox, BoundaryKind::None, params, g, Field::zeros(g), {}, {}}, cfg);
    out.push_back(check("kuznetsov.step_mean_free", steady_fraction(step), 1e-9));
  }
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed, int n) {
  std::vector<CheckResult> out;
  if (suite == "linear" || suite == "all") linear_suite(out, seed, n);
  if (suite == "kuznetsov" || suite == "all") kuznetsov_suite(out, seed, n);
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
  return out;
}

}  // namespace tpwave
