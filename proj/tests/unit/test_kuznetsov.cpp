#include <doctest.h>

#include "helpers.hpp"
#include "tpwave/corpus.hpp"
#include "tpwave/errors.hpp"
#include "tpwave/halfspace.hpp"
#include "tpwave/kuznetsov.hpp"
#include "tpwave/linear_solver.hpp"
#include "tpwave/norms.hpp"
#include "tpwave/projection.hpp"
#include "tpwave/spectral_ops.hpp"

using namespace tpwave;
using namespace testutil;

namespace {

ProblemSpec box_problem(const GridSpec& g, const Field& f) {
  ProblemSpec s;
  s.params = {1.0, 1.0, g.period};
  s.grid = g;
  s.forcing = f;
  return s;
}

Field travelling(const GridSpec& g, double amp, bool sine) {
  return Field::from_function(g, [amp, sine](double t, double x, double, double) {
    return amp * (sine ? std::sin(t + x) : std::cos(t + x));
  });
}

}  // namespace

TEST_SUITE("kuznetsov") {
  TEST_CASE("nonlinearity examples") {
    const GridSpec g = grid(16, 4);
    const Field u = Field::from_function(g, [](double t, double, double, double) { return std::sin(t); });
    const Field expected = Field::from_function(g, [](double t, double, double, double) { return -std::sin(2 * t); });
    CHECK(max_abs_diff(nonlinearity(u, 1.0), expected) <= 1e-13);
    CHECK(nonlinearity(Field::zeros(g), 1.0).max_abs() == 0.0);
    const Field steady = Field::from_function(g, [](double, double x, double y, double) { return std::cos(x) * std::sin(y); });
    CHECK(nonlinearity(steady, 0.7).max_abs() <= 1e-14);
  }

  TEST_CASE("nonlinearity matches an independently assembled product") {
    const GridSpec g = grid(12, 12);
    const double gamma = 0.6;
    const Field u = random_field(g, {.seed = 11, .kt_max = 3, .kx_max = 3});
    Field oracle = 2.0 * gamma * pointwise_product(d_t(u), d_t(u, 2));
    for (int axis = 0; axis < 3; ++axis) oracle = oracle + 2.0 * pointwise_product(d_x(u, axis), d_t(d_x(u, axis)));
    // All factors stay inside the 2/3 band, so only the product truncation matters.
    CHECK(max_rel_diff(nonlinearity(u, gamma), dealias(oracle)) <= 1e-12);
    CHECK(max_rel_diff(nonlinearity(u, gamma, Dealias::None), oracle) <= 1e-12);
  }

  TEST_CASE("single-mode support") {
    const GridSpec g = grid(16, 16);
    const Field u = Field::from_function(g, [](double t, double x, double y, double) { return std::cos(2 * t + x - y); });
    const Spectrum s = kuznetsov_flux(u, 1.3).spectrum();
    double inside = 0.0, outside = 0.0;
    for (int a = 0; a < g.n_t; ++a)
      for (int i = 0; i < g.n_x; ++i)
        for (int j = 0; j < g.n_x; ++j)
          for (int l = 0; l <= g.n_x / 2; ++l) {
            const int kt = signed_mode(a, g.n_t), k1 = signed_mode(i, g.n_x), k2 = signed_mode(j, g.n_x);
            const bool predicted = l == 0 && ((kt == 0 && k1 == 0 && k2 == 0) || (kt == 4 && k1 == 2 && k2 == -2) ||
                                              (kt == -4 && k1 == -2 && k2 == 2));
            (predicted ? inside : outside) += std::norm(s.stored(a, i, j, l));
          }
    CHECK(inside > 0.0);
    CHECK(outside <= 1e-26 * inside);
  }

  TEST_CASE("picard step examples") {
    const GridSpec g = grid(8, 8);
    const Field zero = Field::zeros(g);
    const FixedPointConfig cfg;
    CHECK(picard_step(zero, zero, zero, std::nullopt, box_problem(g, zero), cfg).max_abs() == 0.0);
    const Field f = travelling(g, 1.0, false);
    CHECK(max_rel_diff(picard_step(zero, zero, f, std::nullopt, box_problem(g, f), cfg), travelling(g, 1.0, true)) <= 1e-12);
  }

  TEST_CASE("picard step equals the linear solve of the assembled right-hand side") {
    const GridSpec g = grid(12, 12);
    const Field up = random_field(g, {.seed = 21, .amplitude = 1e-2});
    const Field us = project_steady(random_field(g, {.seed = 22, .time_mean_free = false, .amplitude = 1e-2}));
    const Field ppf = random_field(g, {.seed = 23});
    const ProblemSpec spec = box_problem(g, ppf);
    const FixedPointConfig cfg;
    Field grad = Field::zeros(g);
    for (int axis = 0; axis < 3; ++axis) grad = grad + pointwise_product(d_x(us, axis), d_t(d_x(up, axis)));
    const Field rhs = nonlinearity(up, 1.0) + dealias(2.0 * grad) + ppf;
    const Field expected = solve_periodic(project_periodic(rhs), spec.params);
    const Field got = picard_step(up, us, ppf, std::nullopt, spec, cfg);
    CHECK(max_rel_diff(got, expected) <= 1e-11);
    CHECK(steady_fraction(got) <= 1e-9);
  }

  TEST_CASE("zero data converge at once") {
    const GridSpec g = grid(8, 8);
    const auto r = solve_kuznetsov(box_problem(g, Field::zeros(g)), {});
    CHECK(r.trace.status == IterationStatus::Converged);
    CHECK(r.trace.records.size() == 1);
    CHECK(r.decomposition.total().max_abs() == 0.0);
  }

  TEST_CASE("small travelling-wave forcing") {
    const GridSpec g = grid(16, 16);
    const Field f = travelling(g, 1e-3, false);
    const ProblemSpec spec = box_problem(g, f);
    const auto r = solve_kuznetsov(spec, {});
    REQUIRE(r.trace.status == IterationStatus::Converged);
    const double fn = lp_norm(f, NormSpec{2.0});
    CHECK(r.trace.final_residual <= 1e-8 * fn);
    CHECK(kuznetsov_residual(r.decomposition, spec) == doctest::Approx(r.trace.final_residual).epsilon(1e-6));
    CHECK(r.trace.max_ratio() < 0.5);
    CHECK(r.trace.records.back().diff_norm < FixedPointConfig{}.tol);
  }

  TEST_CASE("large forcing leaves the contraction regime") {
    const GridSpec g = grid(16, 16);
    const auto r = solve_kuznetsov(box_problem(g, travelling(g, 100.0, false)), {});
    CHECK(r.trace.status != IterationStatus::Converged);
  }

  TEST_CASE("half-space solves with boundary data") {
    const GridSpec g = grid(8, 16);
    for (BoundaryKind bc : {BoundaryKind::Dirichlet, BoundaryKind::Neumann}) {
      ProblemSpec spec = box_problem(g, Field::zeros(g));
      spec.domain = Domain::HalfSpace;
      spec.bc = bc;
      spec.boundary_data = separable_boundary_data(g, 0.05, 1, 1, 0);
      const auto r = solve_kuznetsov(spec, {});
      CHECK(r.trace.status == IterationStatus::Converged);
      CHECK(r.trace.final_residual <= 1e-10);
      const Field u = r.decomposition.total();
      double err = 0.0;
      const BoundaryField tr = trace(u, bc);
      for (std::size_t k = 0; k < tr.samples.size(); ++k)
        err = std::max(err, std::abs(tr.samples[k] - spec.boundary_data->samples[k]));
      CHECK(err <= 1e-12);
    }
  }

  TEST_CASE("config validation") {
    FixedPointConfig c;
    CHECK(c.validate().empty());
    c.p = 2.0;
    CHECK_THROWS_AS(c.validate(), Error);
    c.strict_p = false;
    CHECK_FALSE(c.validate().empty());
    c = {};
    c.tol = 0.0;
    CHECK_THROWS_AS(c.validate(), Error);
    c = {};
    c.rho = -1.0;
    CHECK_THROWS_AS(c.validate(), Error);
  }

  TEST_CASE("residual of zero data") {
    const GridSpec g = grid(8, 8);
    const ProblemSpec spec = box_problem(g, Field::zeros(g));
    CHECK(kuznetsov_residual({Field::zeros(g), Field::zeros(g)}, spec) == 0.0);
  }
}
