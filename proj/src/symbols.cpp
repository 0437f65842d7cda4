#include "tpwave/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "tpwave/errors.hpp"

namespace tpwave {

using cplx = std::complex<double>;
using std::numbers::pi;

void SymbolParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error(ErrorKind::InvalidArgument, "lambda must be > 0");
  if (!(period > 0.0) || !std::isfinite(period)) throw Error(ErrorKind::InvalidArgument, "period must be > 0");
}

CutoffSpec CutoffSpec::for_period(double period) { return {pi / period, 2.0 * pi / period}; }

namespace {

double bump(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }
double bump_prime(double s) { return s > 0.0 ? std::exp(-1.0 / s) / (s * s) : 0.0; }

}  // namespace

double cutoff_value(double eta, const CutoffSpec& c) {
  const double a = std::abs(eta);
  if (a <= c.inner) return 1.0;
  if (a >= c.outer) return 0.0;
  const double r = (a - c.inner) / (c.outer - c.inner);
  const double f = bump(1.0 - r);
  const double g = bump(r);
  return f / (f + g);
}

double cutoff_derivative(double eta, const CutoffSpec& c) {
  const double a = std::abs(eta);
  if (a <= c.inner || a >= c.outer) return 0.0;
  const double w = c.outer - c.inner;
  const double r = (a - c.inner) / w;
  const double f = bump(1.0 - r);
  const double g = bump(r);
  const double fr = -bump_prime(1.0 - r);
  const double gr = bump_prime(r);
  const double dchi_dr = (fr * g - f * gr) / ((f + g) * (f + g));
  return dchi_dr * (eta < 0.0 ? -1.0 : 1.0) / w;
}

cplx eval_M(double k, const Vec3& xi, const SymbolParams& p) {
  if (k == 0.0) return 0.0;
  const double q = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
  const cplx den{q - k * k, p.lambda * k * q};
  if (den == cplx{0.0, 0.0}) return 0.0;
  return 1.0 / den;
}

cplx eval_m(double eta, const Vec3& xi, const SymbolParams& p, const CutoffSpec& c) {
  const double num = 1.0 - cutoff_value(eta, c);
  if (num == 0.0) return 0.0;
  const double q = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
  return num / cplx{q - eta * eta, p.lambda * eta * q};
}

namespace {

// Radial building blocks: with q = |xi|^2, B = 1 + i lambda eta, D = q B - eta^2
// and a = 1 - chi(eta), distinct-index xi-derivatives of m reduce to
//   prod_{j in S} xi_j d_j m = 2^n prod xi_j^2 * d^n/dq^n (a / D)
//                            = c_n prod xi_j^2 * a B^n / D^{n+1},
// c_n = (-1)^n n! 2^n. The eta-derivative is taken of a B^n D^{-n-1}.
struct RadialTerms {
  cplx value[4];      // c_n a B^n / D^{n+1}
  cplx eta_deriv[4];  // eta * d/deta of value[n]
};

constexpr double kRadialCoeff[4] = {1.0, -2.0, 8.0, -48.0};

RadialTerms radial_terms(double eta, double q, double a, double ap, double lambda) {
  RadialTerms r{};
  if (a == 0.0 && ap == 0.0) return r;
  const cplx B{1.0, lambda * eta};
  const cplx D = q * B - eta * eta;
  const cplx dD{-2.0 * eta, lambda * q};
  const cplx invD = 1.0 / D;
  cplx Bn{1.0, 0.0};
  cplx Bn1{0.0, 0.0};  // B^{n-1}
  cplx invDn1 = invD;  // D^{-(n+1)}
  const cplx ilam{0.0, lambda};
  for (int n = 0; n < 4; ++n) {
    const double cn = kRadialCoeff[n];
    r.value[n] = cn * a * Bn * invDn1;
    const cplx d = ap * Bn * invDn1 + (n > 0 ? a * double(n) * ilam * Bn1 * invDn1 : cplx{}) -
                   double(n + 1) * a * Bn * invDn1 * invD * dD;
    r.eta_deriv[n] = cn * eta * d;
    Bn1 = Bn;
    Bn *= B;
    invDn1 *= invD;
  }
  return r;
}

Pattern pattern_of(int idx) { return {(idx >> 3) & 1, (idx >> 2) & 1, (idx >> 1) & 1, idx & 1}; }

}  // namespace

cplx marcinkiewicz_product(const Pattern& eps, double eta, const Vec3& xi, const SymbolParams& p,
                           const CutoffSpec& c) {
  const double a = 1.0 - cutoff_value(eta, c);
  const double ap = -cutoff_derivative(eta, c);
  const double q = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
  const RadialTerms r = radial_terms(eta, q, a, ap, p.lambda);
  int n = 0;
  double weight = 1.0;
  for (int j = 0; j < 3; ++j)
    if (eps[j]) {
      ++n;
      weight *= xi[j] * xi[j];
    }
  return weight * (eps[3] ? r.eta_deriv[n] : r.value[n]);
}

double constant_c1(const SymbolParams& p) {
  return std::min(1.0, p.period * p.period / (p.lambda * p.lambda * pi * pi));
}

double constant_c3(const SymbolParams& p) {
  return std::sqrt(p.period * p.period / (p.lambda * p.lambda * pi * pi) + 1.0);
}

bool MarcinkiewiczReport::all_within_bounds() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const PatternRow& r) { return std::isfinite(r.grid_sup) && r.grid_sup <= r.bound; });
}

namespace {

void fill_bounds(MarcinkiewiczReport& rep) {
  const double c0 = rep.c0, c2 = rep.c2, c3 = rep.c3;
  const double s = std::sqrt(4.0 * rep.c1 + 1.0);
  const double tp = rep.params.period / pi;
  for (auto& row : rep.rows) {
    const int n = row.eps[0] + row.eps[1] + row.eps[2];
    const bool eta = row.eps[3] == 1;
    row.uses_c2 = eta;
    if (!eta) {
      static constexpr double kFactor[4] = {1.0, 2.0, 8.0, 48.0};
      static const char* kExpr[4] = {"c0", "2*c0*c3", "8*c0*c3^2", "48*c0*c3^3"};
      row.bound = kFactor[n] * c0 * std::pow(c3, n);
      row.bound_expression = kExpr[n];
    } else {
      switch (n) {
        case 0:
          row.bound = c2 + c0 * s;
          row.bound_expression = "c2 + c0*sqrt(4*c1+1)";
          break;
        case 1:
          row.bound = tp * c2 * c3 + 2.0 * c0 + 4.0 * c0 * c3 * s;
          row.bound_expression = "(tau/pi)*c2*c3 + 2*c0 + 4*c0*c3*sqrt(4*c1+1)";
          break;
        case 2:
          row.bound = 4.0 * tp * c2 * c3 * c3 + 16.0 * c0 * c3 + 24.0 * c0 * c3 * c3 * s;
          row.bound_expression = "(4*tau/pi)*c2*c3^2 + 16*c0*c3 + 24*c0*c3^2*sqrt(4*c1+1)";
          break;
        default:
          row.bound = 192.0 * c0 * c3 * c3 * c3 * s + 144.0 * c0 * c3 * c3 + 24.0 * tp * c2 * c3 * c3 * c3;
          row.bound_expression = "192*c0*c3^3*sqrt(4*c1+1) + 144*c0*c3^2 + (24*tau/pi)*c2*c3^3";
          break;
      }
    }
    row.ratio = row.bound > 0.0 ? row.grid_sup / row.bound : 0.0;
  }
}

}  // namespace

MarcinkiewiczReport marcinkiewicz_check(const SymbolParams& p, const CutoffSpec& c, const SampleSpec& sample) {
  p.validate();
  if (sample.log_points < 2 || sample.band_points < 2 || !(sample.decade_hi > sample.decade_lo)) {
    throw Error(ErrorKind::InvalidArgument, "invalid Marcinkiewicz sample specification");
  }
  const double w = 2.0 * pi / p.period;
  const int N = sample.log_points;
  std::vector<double> xs(N);
  for (int i = 0; i < N; ++i) {
    xs[i] = w * std::pow(10.0, sample.decade_lo + (sample.decade_hi - sample.decade_lo) * i / (N - 1));
  }
  std::vector<double> etas = xs;
  for (int b = 0; b < sample.band_points; ++b) {
    etas.push_back(c.inner + (c.outer - c.inner) * b / (sample.band_points - 1));
  }
  std::sort(etas.begin(), etas.end());
  etas.erase(std::unique(etas.begin(), etas.end()), etas.end());

  constexpr int P = 16;
  const std::size_t cube = std::size_t(N) * N * N;
  std::vector<double> cur(P * cube), prev(P * cube, 0.0);
  double sup[P] = {};
  double jump[P] = {};
  double c2 = 0.0;
  auto idx = [N](int i1, int i2, int i3) { return (std::size_t(i1) * N + i2) * N + i3; };

  for (std::size_t e = 0; e < etas.size(); ++e) {
    const double eta = etas[e];
    const double a = 1.0 - cutoff_value(eta, c);
    const double chip = cutoff_derivative(eta, c);
    const bool in_band = std::abs(eta) > c.inner && std::abs(eta) < c.outer;

#pragma omp parallel
    {
      double lsup[P] = {};
      double lc2 = 0.0;
#pragma omp for schedule(static)
      for (int i1 = 0; i1 < N; ++i1) {
        for (int i2 = 0; i2 < N; ++i2)
          for (int i3 = 0; i3 < N; ++i3) {
            const double s1 = xs[i1] * xs[i1], s2 = xs[i2] * xs[i2], s3 = xs[i3] * xs[i3];
            const double q = s1 + s2 + s3;
            const RadialTerms r = radial_terms(eta, q, a, -chip, p.lambda);
            const double sq[3] = {s1, s2, s3};
            for (int pi_ = 0; pi_ < P; ++pi_) {
              const Pattern ep = pattern_of(pi_);
              int n = 0;
              double wgt = 1.0;
              for (int j = 0; j < 3; ++j)
                if (ep[j]) {
                  ++n;
                  wgt *= sq[j];
                }
              const double mag = wgt * std::abs(ep[3] ? r.eta_deriv[n] : r.value[n]);
              cur[pi_ * cube + idx(i1, i2, i3)] = mag;
              lsup[pi_] = std::max(lsup[pi_], mag);
            }
            if (in_band) {
              const double absD = std::abs(cplx{q - eta * eta, p.lambda * eta * q});
              lc2 = std::max(lc2, 2.0 * pi * std::abs(chip) / (p.period * absD));
            }
          }
      }
#pragma omp critical
      {
        for (int k = 0; k < P; ++k) sup[k] = std::max(sup[k], lsup[k]);
        c2 = std::max(c2, lc2);
      }
    }

    // Resolution check between consecutive eta slabs of the transition band.
    const bool prev_in_band = e > 0 && std::abs(etas[e - 1]) >= c.inner && std::abs(etas[e - 1]) <= c.outer;
    const bool here_in_band = std::abs(eta) >= c.inner && std::abs(eta) <= c.outer;
    if (prev_in_band && here_in_band) {
#pragma omp parallel
      {
        double ljump[P] = {};
#pragma omp for schedule(static)
        for (int i1 = 0; i1 < N; ++i1) {
          for (int i2 = 0; i2 < N; ++i2)
            for (int i3 = 0; i3 < N; ++i3) {
              const std::size_t here = idx(i1, i2, i3);
              for (int k = 0; k < P; ++k) {
                const double v = cur[k * cube + here];
                const double u = prev[k * cube + here];
                ljump[k] = std::max(ljump[k], std::abs(u - v));
              }
            }
        }
#pragma omp critical
        for (int k = 0; k < P; ++k) jump[k] = std::max(jump[k], ljump[k]);
      }
    }
    std::swap(cur, prev);
  }

  for (int k = 0; k < P; ++k) {
    if (!std::isfinite(sup[k])) {
      throw Error(ErrorKind::GridTooCoarse, "non-finite product sup for pattern " + std::to_string(k));
    }
    if (jump[k] > 0.5 * sup[k]) {
      std::ostringstream msg;
      msg << "pattern " << k << " changes by " << jump[k] << " between neighbouring band samples"
          << " (sup " << sup[k] << ")";
      throw Error(ErrorKind::GridTooCoarse, msg.str());
    }
  }

  MarcinkiewiczReport rep;
  rep.params = p;
  rep.c0 = sup[0];
  rep.c1 = constant_c1(p);
  rep.c2 = c2;
  rep.c3 = constant_c3(p);
  for (int k = 0; k < P; ++k) {
    PatternRow row;
    row.eps = pattern_of(k);
    row.grid_sup = sup[k];
    rep.rows.push_back(row);
    rep.overall_sup = std::max(rep.overall_sup, sup[k]);
  }
  fill_bounds(rep);
  return rep;
}

void write_csv(const MarcinkiewiczReport& report, std::ostream& os) {
  os << "epsilon_pattern,grid_sup,bound,ratio,bound_expression\n";
  os.precision(17);
  for (const auto& r : report.rows) {
    os << r.eps[0] << r.eps[1] << r.eps[2] << r.eps[3] << ',' << r.grid_sup << ',' << r.bound << ','
       << r.ratio << ",\"" << r.bound_expression << "\"\n";
  }
}

}  // namespace tpwave
