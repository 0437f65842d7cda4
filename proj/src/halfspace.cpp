#include "tpwave/halfspace.hpp"

#include <cmath>
#include <sstream>

#include "tpwave/errors.hpp"
#include "tpwave/kernels.hpp"
#include "tpwave/norms.hpp"
#include "tpwave/projection.hpp"
#include "tpwave/spectral_ops.hpp"

namespace tpwave {

double HalfField::max_abs() const { return kernels::omp::max_abs(samples); }

HalfField restrict_half(const Field& f) {
  const GridSpec& g = f.grid();
  HalfField h{g, {}};
  h.samples.resize(std::size_t(g.n_t) * g.n_x * g.n_x * h.planes());
  for (int a = 0; a < g.n_t; ++a)
    for (int i = 0; i < g.n_x; ++i)
      for (int j = 0; j < g.n_x; ++j)
        for (int l = 0; l < h.planes(); ++l) h.samples[h.index(a, i, j, l)] = f.at(a, i, j, l);
  return h;
}

namespace {

Field reflect(const HalfField& h, double sign, bool zero_ends) {
  const GridSpec& g = h.grid;
  const int half = g.n_x / 2;
  std::vector<double> out(g.size());
  for (int a = 0; a < g.n_t; ++a)
    for (int i = 0; i < g.n_x; ++i)
      for (int j = 0; j < g.n_x; ++j)
        for (int l = 0; l < g.n_x; ++l) {
          double v;
          if (l <= half) {
            v = (zero_ends && (l == 0 || l == half)) ? 0.0 : h.at(a, i, j, l);
          } else {
            v = sign * h.at(a, i, j, g.n_x - l);
          }
          out[g.index(a, i, j, l)] = v;
        }
  return Field(g, std::move(out));
}

}  // namespace

Field reflect_odd(const HalfField& h, WallPolicy policy) {
  if (policy == WallPolicy::Strict) {
    const GridSpec& g = h.grid;
    double wall = 0.0;
    for (int a = 0; a < g.n_t; ++a)
      for (int i = 0; i < g.n_x; ++i)
        for (int j = 0; j < g.n_x; ++j) wall = std::max(wall, std::abs(h.at(a, i, j, 0)));
    const double scale = h.max_abs();
    if (wall > kOddWallTolerance * scale) {
      std::ostringstream msg;
      msg << "forcing is " << wall / scale << " (relative) on the wall; odd reflection needs zero";
      throw Error(ErrorKind::OddIncompatible, msg.str());
    }
  }
  return reflect(h, -1.0, true);
}

Field reflect_even(const HalfField& h) { return reflect(h, 1.0, false); }

BoundaryField trace_dirichlet(const Field& u) {
  const GridSpec& g = u.grid();
  BoundaryField b = BoundaryField::zeros(g);
  for (int a = 0; a < g.n_t; ++a)
    for (int i = 0; i < g.n_x; ++i)
      for (int j = 0; j < g.n_x; ++j) b.samples[(std::size_t(a) * g.n_x + i) * g.n_x + j] = u.at(a, i, j, 0);
  return b;
}

BoundaryField trace_neumann(const Field& u) {
  BoundaryField b = trace_dirichlet(d_x(u, 2));
  for (double& v : b.samples) v = -v;
  return b;
}

BoundaryField trace(const Field& u, BoundaryKind bc) {
  if (bc == BoundaryKind::Dirichlet) return trace_dirichlet(u);
  if (bc == BoundaryKind::Neumann) return trace_neumann(u);
  throw Error(ErrorKind::InvalidArgument, "trace needs a boundary kind");
}

namespace {

// Space-time integral of |f|^power (power 0 means signed f).
double domain_integral(const Field& f, Domain domain, bool absolute) {
  const GridSpec& g = f.grid();
  const int half = g.n_x / 2;
  double acc = 0.0;
  for (int a = 0; a < g.n_t; ++a)
    for (int i = 0; i < g.n_x; ++i)
      for (int j = 0; j < g.n_x; ++j) {
        if (domain == Domain::PeriodicBox) {
          for (int l = 0; l < g.n_x; ++l) {
            const double v = f.at(a, i, j, l);
            acc += absolute ? std::abs(v) : v;
          }
        } else {
          for (int l = 0; l <= half; ++l) {
            const double v = f.at(a, i, j, l);
            const double w = (l == 0 || l == half) ? 0.5 : 1.0;
            acc += w * (absolute ? std::abs(v) : v);
          }
        }
      }
  return acc * g.dt() * g.cell_volume();
}

double wall_integral(const BoundaryField& b, bool absolute) {
  double acc = 0.0;
  for (double v : b.samples) acc += absolute ? std::abs(v) : v;
  return acc * b.grid.dt() * b.grid.dx() * b.grid.dx();
}

}  // namespace

double neumann_compatibility(const Field& f, const std::optional<BoundaryField>& g, Domain domain) {
  double v = domain_integral(f, domain, false);
  if (domain == Domain::HalfSpace && g) v += wall_integral(*g, false);
  return v;
}

double neumann_compatibility_threshold(const Field& f, const std::optional<BoundaryField>& g, Domain domain) {
  double v = domain_integral(f, domain, true);
  if (domain == Domain::HalfSpace && g) v += wall_integral(*g, true);
  return kCompatibilityTolerance * v;
}

double bump(double s, double width) {
  const double r = s / width;
  if (std::abs(r) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - r * r));
}

Field lift_boundary_data(const BoundaryField& g, BoundaryKind bc) {
  if (bc == BoundaryKind::None) throw Error(ErrorKind::InvalidArgument, "lifting needs a boundary kind");
  const GridSpec& gr = g.grid;
  const double width = gr.box_len / 4.0;
  const double kick = gr.space_fundamental();
  std::vector<double> profile(gr.n_x);
  for (int l = 0; l < gr.n_x; ++l) {
    const double s = signed_mode(l, gr.n_x) * gr.dx();
    // The Neumann profile is a single sine mode so its spectral wall derivative is exact.
    profile[l] = bc == BoundaryKind::Dirichlet ? bump(s, width) : -std::sin(s * kick) / kick;
  }
  std::vector<double> out(gr.size());
  for (int a = 0; a < gr.n_t; ++a)
    for (int i = 0; i < gr.n_x; ++i)
      for (int j = 0; j < gr.n_x; ++j) {
        const double v = g.at(a, i, j);
        for (int l = 0; l < gr.n_x; ++l) out[gr.index(a, i, j, l)] = v * profile[l];
      }
  return Field(gr, std::move(out));
}

BoundaryField separable_boundary_data(const GridSpec& grid, double amplitude, int time_mode, int m1, int m2) {
  BoundaryField b = BoundaryField::zeros(grid);
  const double k = time_mode * grid.time_fundamental();
  const double x1 = m1 * grid.space_fundamental();
  const double x2 = m2 * grid.space_fundamental();
  for (int a = 0; a < grid.n_t; ++a)
    for (int i = 0; i < grid.n_x; ++i)
      for (int j = 0; j < grid.n_x; ++j)
        b.samples[(std::size_t(a) * grid.n_x + i) * grid.n_x + j] =
            amplitude * std::cos(k * grid.t(a)) * std::cos(x1 * grid.x(i) + x2 * grid.x(j));
  return b;
}

namespace {

double boundary_max_diff(const BoundaryField& a, const BoundaryField& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.samples.size(); ++k) m = std::max(m, std::abs(a.samples[k] - b.samples[k]));
  return m;
}

}  // namespace

std::optional<Field> resolve_extension(const ProblemSpec& spec) {
  if (spec.boundary_ext && spec.boundary_data) {
    const BoundaryField tr = trace(*spec.boundary_ext, spec.bc);
    const double scale = std::max(spec.boundary_data->max_abs(), 1e-300);
    const double diff = boundary_max_diff(tr, *spec.boundary_data);
    if (diff > kExtensionTraceTolerance * scale && diff > 0.0) {
      std::ostringstream msg;
      msg << "trace of the boundary extension differs from the boundary data by " << diff / scale
          << " (relative)";
      throw Error(ErrorKind::ExtensionTraceMismatch, msg.str());
    }
    return spec.boundary_ext;
  }
  if (spec.boundary_ext) return spec.boundary_ext;
  if (spec.boundary_data) return lift_boundary_data(*spec.boundary_data, spec.bc);
  return std::nullopt;
}

LinearSolveResult solve_halfspace(const ProblemSpec& spec, const HalfSpaceOptions& opts) {
  spec.validate();
  if (spec.domain != Domain::HalfSpace) throw Error(ErrorKind::InvalidArgument, "solve_halfspace needs a half-space problem");
  const GridSpec& g = spec.grid;
  const std::optional<Field> ext = resolve_extension(spec);
  const BoundaryField data = spec.boundary_data ? *spec.boundary_data
                             : ext              ? trace(*ext, spec.bc)
                                                : BoundaryField::zeros(g);

  if (spec.bc == BoundaryKind::Neumann && opts.check_compatibility) {
    const std::optional<BoundaryField> gopt = data;
    const double c = neumann_compatibility(spec.forcing, gopt, Domain::HalfSpace);
    const double thr = neumann_compatibility_threshold(spec.forcing, gopt, Domain::HalfSpace);
    if (std::abs(c) > thr) {
      std::ostringstream msg;
      msg << "Neumann data violate the compatibility condition: integral " << c << " exceeds " << thr;
      throw Error(ErrorKind::MeanNotZero, msg.str());
    }
  }

  Field forcing = spec.forcing;
  WallPolicy policy = opts.forcing_policy;
  if (spec.bc == BoundaryKind::Dirichlet && policy == WallPolicy::Strict) {
    reflect_odd(spec.forcing, WallPolicy::Strict);  // validates the caller's forcing
  }
  if (ext) {
    forcing = forcing - damped_wave_operator(*ext, spec.params.lambda);
    policy = WallPolicy::ForceZero;
  }
  const Field reflected = spec.bc == BoundaryKind::Dirichlet ? reflect_odd(forcing, policy) : reflect_even(forcing);

  LinearSolveOptions lopts;
  lopts.drop_zero_mode = spec.bc == BoundaryKind::Neumann;
  LinearSolveResult res = solve_box(reflected, spec.params, lopts);
  if (ext) {
    const Field ext_steady = project_steady(*ext);
    res.decomposition.steady = res.decomposition.steady + ext_steady;
    res.decomposition.periodic = res.decomposition.periodic + (*ext - ext_steady);
  }

  const Field u = res.decomposition.total();
  res.trace_error = boundary_max_diff(trace(u, spec.bc), data);
  const Field r = damped_wave_operator(res.decomposition.periodic, spec.params.lambda) - project_periodic(spec.forcing);
  res.residual_norm = lp_norm(r, NormSpec{2.0, Region::HalfInterior});
  return res;
}

}  // namespace tpwave
