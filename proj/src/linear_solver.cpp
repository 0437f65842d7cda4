#include "tpwave/linear_solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tpwave/errors.hpp"
#include "tpwave/kernels.hpp"
#include "tpwave/norms.hpp"
#include "tpwave/projection.hpp"
#include "tpwave/spectral_ops.hpp"
#include "tpwave/symbols.hpp"

namespace tpwave {

void ModelParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error(ErrorKind::InvalidArgument, "lambda must be > 0");
  if (!std::isfinite(gamma)) throw Error(ErrorKind::InvalidArgument, "gamma must be finite");
  if (!(period > 0.0) || !std::isfinite(period)) throw Error(ErrorKind::InvalidArgument, "period must be > 0");
}

void ModelParams::validate(const GridSpec& grid) const {
  validate();
  if (std::abs(period - grid.period) > 1e-12 * period) {
    throw Error(ErrorKind::InvalidArgument, "model period differs from grid period");
  }
}

double BoundaryField::max_abs() const { return kernels::omp::max_abs(samples); }

void ProblemSpec::validate() const {
  grid.validate();
  params.validate(grid);
  if (!(forcing.grid() == grid)) throw Error(ErrorKind::InvalidArgument, "forcing grid differs from problem grid");
  if (domain == Domain::PeriodicBox) {
    if (bc != BoundaryKind::None) throw Error(ErrorKind::InvalidArgument, "periodic box takes no boundary condition");
    if (boundary_ext || boundary_data) throw Error(ErrorKind::InvalidArgument, "periodic box takes no boundary data");
  } else {
    if (bc == BoundaryKind::None) throw Error(ErrorKind::InvalidArgument, "half-space needs Dirichlet or Neumann");
    if (boundary_ext && !(boundary_ext->grid() == grid)) {
      throw Error(ErrorKind::InvalidArgument, "boundary extension grid differs from problem grid");
    }
    if (boundary_data && !(boundary_data->grid == grid)) {
      throw Error(ErrorKind::InvalidArgument, "boundary data grid differs from problem grid");
    }
  }
}

Field solve_steady(const Field& pf, double reference_rms) {
  if (periodic_fraction(pf) > kMeanTolerance) {
    throw Error(ErrorKind::InvalidArgument, "steady solve needs a time-constant right-hand side");
  }
  const Spectrum& s = pf.spectrum();
  const double mean = std::abs(s.coefficient(0, 0, 0, 0));
  const double rms = lp_norm(pf, NormSpec{2.0}) / std::sqrt(pf.grid().box_volume());
  if (mean > kMeanTolerance * std::max(rms, reference_rms) && mean > 0.0) {
    std::ostringstream msg;
    msg << "spatial mean " << mean << " of the steady forcing is not zero (rms " << rms << ")";
    throw Error(ErrorKind::MeanNotZero, msg.str());
  }
  return apply_symbol(pf, [](double k, double a, double b, double c) {
    const double q = a * a + b * b + c * c;
    return (k == 0.0 && q > 0.0) ? cplx{1.0 / q, 0.0} : cplx{0.0, 0.0};
  });
}

namespace {

Field apply_M(const Field& ppf, const ModelParams& params) {
  const SymbolParams sp{params.lambda, params.period};
  return apply_symbol(ppf, [&sp](double k, double a, double b, double c) { return eval_M(k, {a, b, c}, sp); });
}

}  // namespace

Field solve_periodic(const Field& ppf, const ModelParams& params) {
  params.validate();
  if (steady_fraction(ppf) > kMeanTolerance) {
    throw Error(ErrorKind::NotMeanFree, "periodic solve needs a forcing with zero time mean");
  }
  return apply_M(ppf, params);
}

LinearSolveResult solve_box(const Field& f, const ModelParams& params, const LinearSolveOptions& opts) {
  params.validate(f.grid());
  const GridSpec& g = f.grid();
  LinearSolveResult res;
  Field pf = project_steady(f);
  const Field ppf = f - pf;

  const double mean = pf.spectrum().coefficient(0, 0, 0, 0).real();
  if (opts.drop_zero_mode && mean != 0.0) {
    pf = pf - Field::constant(g, mean);
    res.steady_zero_mode_dropped = std::abs(mean);
  }
  // Round-off in P f of a purely periodic f is judged against f itself.
  const double f_rms = lp_norm(f, NormSpec{2.0}) / std::sqrt(g.box_volume());
  res.decomposition.steady = solve_steady(pf, f_rms);
  // ppf is mean-free by construction; for a steady f it is pure round-off.
  res.decomposition.periodic = apply_M(ppf, params);
  res.residual_norm = lp_norm(damped_wave_operator(res.decomposition.periodic, params.lambda) - ppf, NormSpec{2.0});
  res.trace_error = 0.0;
  return res;
}

}  // namespace tpwave
