#include "tpwave/norms.hpp"

#include <algorithm>
#include <cmath>

#include "tpwave/errors.hpp"
#include "tpwave/kernels.hpp"
#include "tpwave/transform.hpp"

namespace tpwave {

namespace {

inline double abs_pow(double v, double p) {
  const double a = std::abs(v);
  return p == 2.0 ? a * a : std::pow(a, p);
}

// Per-time-slice weighted sums of |f|^p, combined in slice order.
double half_box_power_sum(const Field& f, double p, bool interior) {
  const GridSpec& g = f.grid();
  const auto s = f.samples();
  const int half = g.n_x / 2;
  std::vector<double> partial(g.n_t, 0.0);
  const int nt = g.n_t;
#pragma omp parallel for schedule(static)
  for (int a = 0; a < nt; ++a) {
    double acc = 0.0;
    for (int i = 0; i < g.n_x; ++i)
      for (int j = 0; j < g.n_x; ++j)
        for (int l = 0; l <= half; ++l) {
          const bool end = l == 0 || l == half;
          if (interior && end) continue;
          const double w = end ? 0.5 : 1.0;
          acc += w * abs_pow(s[g.index(a, i, j, l)], p);
        }
    partial[a] = acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

double half_box_max(const Field& f, bool interior) {
  const GridSpec& g = f.grid();
  double m = 0.0;
  for (int a = 0; a < g.n_t; ++a)
    for (int i = 0; i < g.n_x; ++i)
      for (int j = 0; j < g.n_x; ++j)
        for (int l = interior ? 1 : 0; l <= g.n_x / 2 - (interior ? 1 : 0); ++l)
          m = std::max(m, std::abs(f.at(a, i, j, l)));
  return m;
}

void require_p(double p) {
  if (!(p >= 1.0)) throw Error(ErrorKind::InvalidArgument, "norm exponent must be >= 1");
}

double slice_norm(std::span<const double> slice, double q, double cell) {
  if (std::isinf(q)) return kernels::serial::max_abs(slice);
  return std::pow(cell * kernels::serial::power_sum(slice, q), 1.0 / q);
}

double time_mean_norm(const std::vector<double>& per_slice, double r) {
  if (std::isinf(r)) return *std::max_element(per_slice.begin(), per_slice.end());
  double acc = 0.0;
  for (double v : per_slice) acc += std::pow(v, r);
  return std::pow(acc / per_slice.size(), 1.0 / r);
}

std::vector<double> slice_norms(std::span<const double> samples, const GridSpec& g, double q) {
  std::vector<double> out(g.n_t);
  const std::size_t ps = g.plane_size();
  const int nt = g.n_t;
#pragma omp parallel for schedule(static)
  for (int a = 0; a < nt; ++a) out[a] = slice_norm(samples.subspan(a * ps, ps), q, g.cell_volume());
  return out;
}

}  // namespace

double lp_norm(const Field& f, const NormSpec& spec) {
  require_p(spec.p);
  const GridSpec& g = f.grid();
  if (spec.region == Region::Box) {
    if (std::isinf(spec.p)) return f.max_abs();
    return std::pow(g.cell_volume() / g.n_t * kernels::omp::power_sum(f.samples(), spec.p), 1.0 / spec.p);
  }
  const bool interior = spec.region == Region::HalfInterior;
  if (std::isinf(spec.p)) return half_box_max(f, interior);
  return std::pow(g.cell_volume() / g.n_t * half_box_power_sum(f, spec.p, interior), 1.0 / spec.p);
}

double mixed_norm(const Field& f, double r, double q) {
  require_p(r);
  require_p(q);
  return time_mean_norm(slice_norms(f.samples(), f.grid(), q), r);
}

double gradient_mixed_norm(const Field& u, double r, double q) {
  require_p(r);
  require_p(q);
  const Field g1 = d_x(u, 0), g2 = d_x(u, 1), g3 = d_x(u, 2);
  std::vector<double> mag(u.size());
  const auto a = g1.samples(), b = g2.samples(), c = g3.samples();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(mag.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) mag[k] = std::sqrt(a[k] * a[k] + b[k] * b[k] + c[k] * c[k]);
  return time_mean_norm(slice_norms(mag, u.grid(), q), r);
}

namespace {

std::vector<std::array<int, 3>> spatial_multi_indices(int min_order, int max_order) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a <= max_order; ++a)
    for (int b = 0; a + b <= max_order; ++b)
      for (int c = 0; a + b + c <= max_order; ++c)
        if (a + b + c >= min_order) out.push_back({a, b, c});
  return out;
}

double derivative_power_sum(const Field& u, const std::vector<DerivativeOrder>& ds, double p, Region region) {
  double total = 0.0;
  for (const auto& d : ds) total += std::pow(lp_norm(derivative(u, d), NormSpec{p, region}), p);
  return total;
}

}  // namespace

std::vector<DerivativeOrder> sols_derivatives() {
  std::vector<DerivativeOrder> out;
  out.push_back({2, {0, 0, 0}});
  for (int a = 0; a <= 1; ++a)
    for (const auto& alpha : spatial_multi_indices(0, 2)) out.push_back({a, alpha});
  return out;
}

std::vector<DerivativeOrder> w12_derivatives() {
  std::vector<DerivativeOrder> out;
  out.push_back({0, {0, 0, 0}});
  out.push_back({1, {0, 0, 0}});
  for (const auto& alpha : spatial_multi_indices(1, 2)) out.push_back({0, alpha});
  return out;
}

double sols_norm(const Field& u, double p, Region region) {
  require_p(p);
  return std::pow(derivative_power_sum(u, sols_derivatives(), p, region), 1.0 / p);
}

double w12_norm(const Field& u, double p) {
  require_p(p);
  return std::pow(derivative_power_sum(u, w12_derivatives(), p, Region::Box), 1.0 / p);
}

void EmbeddingSpec::validate() const {
  constexpr double n = 3.0;
  constexpr double eps = 1e-12;
  auto fail = [](const std::string& what) { throw Error(ErrorKind::ExponentViolation, what); };
  if (!(p > 1.0) || !std::isfinite(p)) fail("p must lie in (1, inf)");
  if (alpha < 0.0 || alpha > 2.0) fail("alpha must lie in [0, 2]");
  if (beta < 0.0 || beta > 1.0) fail("beta must lie in [0, 1]");
  for (double e : {r0, q0, r1, q1})
    if (e < p) fail("exponents r0, q0, r1, q1 must be >= p");

  auto check_time = [&](double s, double r, const char* name) {
    const double sp = s * p;
    if (sp < 2.0 - eps) {
      if (r > 2.0 * p / (2.0 - sp) * (1.0 + eps)) fail(std::string(name) + " exceeds 2p/(2 - s p)");
    } else if (std::abs(sp - 2.0) <= eps) {
      if (std::isinf(r)) fail(std::string(name) + " must be finite when s p = 2");
    }
  };
  auto check_space = [&](double order, double q, const char* name) {
    const double op = order * p;
    if (op < n - eps) {
      if (q > n * p / (n - op) * (1.0 + eps)) fail(std::string(name) + " exceeds n p/(n - order p)");
    } else if (std::abs(op - n) <= eps) {
      if (std::isinf(q)) fail(std::string(name) + " must be finite at the critical exponent");
    }
  };
  check_time(alpha, r0, "r0");
  check_space(2.0 - alpha, q0, "q0");
  check_time(beta, r1, "r1");
  check_space(1.0 - beta, q1, "q1");
}

RatioReport embedding_check(const Field& u, const EmbeddingSpec& spec) {
  spec.validate();
  RatioReport r;
  r.lhs = mixed_norm(u, spec.r0, spec.q0) + gradient_mixed_norm(u, spec.r1, spec.q1);
  r.rhs = w12_norm(u, spec.p);
  r.ratio = r.lhs == 0.0 ? 0.0 : r.lhs / r.rhs;
  return r;
}

RatioReport product_estimate_check(const Field& u, const Field& v, double p) {
  if (!(p > 2.5 && p < 3.0)) throw Error(ErrorKind::InvalidArgument, "product estimate needs p in (5/2, 3)");
  const Field vt = d_t(v);
  const Field utt = d_t(u, 2);
  double lhs = lp_norm(pointwise_product(vt, utt), NormSpec{p});
  std::vector<double> dot(u.size(), 0.0);
  for (int j = 0; j < 3; ++j) {
    const Field gv = d_x(v, j);
    const Field gut = derivative(u, {1, {j == 0, j == 1, j == 2}});
    const auto a = gv.samples(), b = gut.samples();
    for (std::size_t k = 0; k < dot.size(); ++k) dot[k] += a[k] * b[k];
  }
  lhs += lp_norm(Field(u.grid(), std::move(dot)), NormSpec{p});
  RatioReport r;
  r.lhs = lhs;
  r.rhs = sols_norm(v, p) * sols_norm(u, p);
  r.ratio = lhs == 0.0 ? 0.0 : lhs / r.rhs;
  return r;
}

double trace_norm_surrogate(const BoundaryField& g, BoundaryKind bc) {
  if (bc == BoundaryKind::None) throw Error(ErrorKind::InvalidArgument, "trace norm needs a boundary kind");
  const GridSpec& gr = g.grid;
  const auto coeffs = detail::plane_forward(gr, g.samples);
  const int nh = gr.n_half();
  const double t_exp = bc == BoundaryKind::Dirichlet ? 1.75 : 1.25;
  const double x_exp = bc == BoundaryKind::Dirichlet ? 1.5 : 0.5;
  double acc = 0.0;
  for (int a = 0; a < gr.n_t; ++a)
    for (int i = 0; i < gr.n_x; ++i)
      for (int l = 0; l < nh; ++l) {
        const double k = gr.time_freq(a);
        const double x1 = gr.space_freq(i), x2 = gr.space_freq(l);
        const double kk = 1.0 + k * k;
        const double w = std::pow(kk, t_exp) + kk * std::pow(1.0 + x1 * x1 + x2 * x2, x_exp);
        const double mult = (l == 0 || 2 * l == gr.n_x) ? 1.0 : 2.0;
        acc += mult * w * std::norm(coeffs[(std::size_t(a) * gr.n_x + i) * nh + l]);
      }
  return std::sqrt(gr.box_len * gr.box_len * acc);
}

}  // namespace tpwave
