#include "tpwave/kuznetsov.hpp"

#include <cmath>
#include <sstream>

#include "tpwave/errors.hpp"
#include "tpwave/halfspace.hpp"
#include "tpwave/linear_solver.hpp"
#include "tpwave/norms.hpp"
#include "tpwave/projection.hpp"

namespace tpwave {

std::string FixedPointConfig::validate() const {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw Error(ErrorKind::InvalidArgument, "rho must be > 0");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorKind::InvalidArgument, "tol must be > 0");
  if (max_iter < 1) throw Error(ErrorKind::InvalidArgument, "max_iter must be >= 1");
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorKind::InvalidArgument, "p must be finite and >= 1");
  if (p > 2.5 && p < 3.0) return {};
  if (strict_p) throw Error(ErrorKind::ExponentViolation, "p must lie in (5/2, 3)");
  return "p outside (5/2, 3): the contraction argument does not apply";
}

std::string_view to_string(IterationStatus s) {
  switch (s) {
    case IterationStatus::Converged: return "Converged";
    case IterationStatus::MaxIter: return "MaxIter";
    case IterationStatus::Diverged: return "Diverged";
  }
  return "?";
}

double IterationTrace::max_ratio() const {
  double m = 0.0;
  for (std::size_t n = 1; n < records.size(); ++n) m = std::max(m, records[n].ratio);
  return m;
}

namespace {

Field dot_sum(const std::array<Field, 3>& a, const std::array<Field, 3>& b) {
  const GridSpec& g = a[0].grid();
  std::vector<double> out(g.size(), 0.0);
  for (int j = 0; j < 3; ++j) {
    const auto x = a[j].samples(), y = b[j].samples();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += x[k] * y[k];
  }
  return Field(g, std::move(out));
}

std::array<Field, 3> gradient(const Field& u) { return {d_x(u, 0), d_x(u, 1), d_x(u, 2)}; }

std::array<Field, 3> gradient_dt(const Field& u) {
  return {derivative(u, {1, {1, 0, 0}}), derivative(u, {1, {0, 1, 0}}), derivative(u, {1, {0, 0, 1}})};
}

Region residual_region(const ProblemSpec& spec) {
  return spec.domain == Domain::PeriodicBox ? Region::Box : Region::HalfInterior;
}

Region norm_region(const ProblemSpec& spec) {
  return spec.domain == Domain::PeriodicBox ? Region::Box : Region::HalfBox;
}

}  // namespace

Field kuznetsov_flux(const Field& u, double gamma, Dealias dealias) {
  const Field ud = maybe_dealias(u, dealias);
  const Field ut = d_t(ud);
  const auto gr = gradient(ud);
  const Field s = gamma * pointwise_product(ut, ut) + dot_sum(gr, gr);
  return maybe_dealias(s, dealias);
}

Field nonlinearity(const Field& u, double gamma, Dealias dealias) {
  const Field ud = maybe_dealias(u, dealias);
  const Field ut = d_t(ud);
  const Field utt = d_t(ud, 2);
  const Field s = (2.0 * gamma) * pointwise_product(ut, utt) + 2.0 * dot_sum(gradient(ud), gradient_dt(ud));
  return maybe_dealias(s, dealias);
}

Field coupling_term(const Field& u_s, const Field& u_p, Dealias dealias) {
  const Field sd = maybe_dealias(u_s, dealias);
  const Field pd = maybe_dealias(u_p, dealias);
  return maybe_dealias(2.0 * dot_sum(gradient(sd), gradient_dt(pd)), dealias);
}

Field picard_step(const Field& u_p, const Field& u_s, const Field& ppf, const std::optional<Field>& ppg_ext,
                  const ProblemSpec& spec, const FixedPointConfig& config) {
  const Field rhs = project_periodic(nonlinearity(u_p, spec.params.gamma, config.dealias) +
                                     coupling_term(u_s, u_p, config.dealias) + ppf);
  if (spec.domain == Domain::PeriodicBox) return solve_periodic(rhs, spec.params);

  ProblemSpec sub = spec;
  sub.forcing = rhs;
  sub.boundary_ext = ppg_ext;
  sub.boundary_data.reset();
  HalfSpaceOptions opts;
  opts.forcing_policy = WallPolicy::ForceZero;
  opts.check_compatibility = false;  // time-mean-free data integrate to zero
  const LinearSolveResult r = solve_halfspace(sub, opts);
  return r.decomposition.periodic;
}

double kuznetsov_residual(const SolutionDecomposition& u, const ProblemSpec& spec, Dealias dealias) {
  const Field total = u.total();
  const Field r = damped_wave_operator(total, spec.params.lambda) - nonlinearity(total, spec.params.gamma, dealias) -
                  spec.forcing;
  return lp_norm(r, NormSpec{2.0, residual_region(spec)});
}

namespace {

// Steady part of the solution with the steady boundary extension.
Field steady_solve(const ProblemSpec& spec, const Field& pf, const std::optional<Field>& pg_ext) {
  if (spec.domain == Domain::PeriodicBox) {
    return solve_steady(pf, lp_norm(spec.forcing, NormSpec{2.0}) / std::sqrt(spec.grid.box_volume()));
  }
  ProblemSpec sub = spec;
  sub.forcing = pf;
  sub.boundary_ext = pg_ext;
  sub.boundary_data.reset();
  HalfSpaceOptions opts;
  opts.forcing_policy = WallPolicy::ForceZero;
  opts.check_compatibility = false;  // checked on the full data by the caller
  return solve_halfspace(sub, opts).decomposition.steady;
}

}  // namespace

KuznetsovResult solve_kuznetsov(const ProblemSpec& spec_in, const FixedPointConfig& config) {
  spec_in.validate();
  KuznetsovResult out;
  IterationTrace& trace = out.trace;
  trace.warning = config.validate();

  ProblemSpec spec = spec_in;
  std::optional<Field> ext;
  if (spec.domain == Domain::HalfSpace) {
    ext = resolve_extension(spec);
    if (!spec.boundary_data && ext) spec.boundary_data = tpwave::trace(*ext, spec.bc);
  }

  if (config.auto_scale) {
    double size = lp_norm(spec.forcing, NormSpec{config.p, norm_region(spec)});
    if (spec.boundary_data) size += trace_norm_surrogate(*spec.boundary_data, spec.bc);
    if (size > 0.0) {
      const double s = config.rho * config.rho / size;
      trace.data_scale = s;
      spec.forcing = s * spec.forcing;
      if (ext) ext = s * *ext;
      if (spec.boundary_data)
        for (double& v : spec.boundary_data->samples) v *= s;
    }
  }
  spec.boundary_ext = ext;

  if (spec.domain == Domain::HalfSpace) {
    if (spec.bc == BoundaryKind::Neumann) {
      const double c = neumann_compatibility(spec.forcing, spec.boundary_data, Domain::HalfSpace);
      const double thr = neumann_compatibility_threshold(spec.forcing, spec.boundary_data, Domain::HalfSpace);
      if (std::abs(c) > thr) {
        std::ostringstream msg;
        msg << "Neumann data violate the compatibility condition: integral " << c << " exceeds " << thr;
        throw Error(ErrorKind::MeanNotZero, msg.str());
      }
    } else {
      reflect_odd(spec.forcing, WallPolicy::Strict);
    }
  }

  const Field pf = project_steady(spec.forcing);
  const Field ppf = spec.forcing - pf;
  std::optional<Field> pg_ext, ppg_ext;
  if (ext) {
    pg_ext = project_steady(*ext);
    ppg_ext = *ext - *pg_ext;
  }
  const Field u_s = steady_solve(spec, pf, pg_ext);

  const Region region = norm_region(spec);
  Field u = Field::zeros(spec.grid);
  double prev_diff = 0.0;
  int growing = 0;
  trace.status = IterationStatus::MaxIter;
  for (int n = 1; n <= config.max_iter; ++n) {
    const Field next = picard_step(u, u_s, ppf, ppg_ext, spec, config);
    IterationRecord rec;
    rec.iteration = n;
    rec.diff_norm = sols_norm(next - u, config.p, region);
    rec.iterate_norm = sols_norm(next, config.p, region);
    rec.ratio = prev_diff > 0.0 ? rec.diff_norm / prev_diff : 0.0;
    rec.residual = kuznetsov_residual({u_s, next}, spec, config.dealias);
    trace.records.push_back(rec);
    u = next;
    prev_diff = rec.diff_norm;

    if (!std::isfinite(rec.diff_norm) || !std::isfinite(rec.iterate_norm)) {
      trace.status = IterationStatus::Diverged;
      break;
    }
    if (rec.diff_norm < config.tol) {
      trace.status = IterationStatus::Converged;
      break;
    }
    growing = (rec.iterate_norm > config.rho && rec.ratio > 1.0) ? growing + 1 : 0;
    if (growing >= 3) {
      trace.status = IterationStatus::Diverged;
      break;
    }
  }
  out.decomposition = {u_s, u};
  trace.final_residual = trace.records.empty() ? 0.0 : trace.records.back().residual;
  return out;
}

}  // namespace tpwave
