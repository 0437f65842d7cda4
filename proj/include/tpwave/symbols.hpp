#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace tpwave {

using Vec3 = std::array<double, 3>;

struct SymbolParams {
  double lambda = 1.0;
  double period = 1.0;

  void validate() const;
};

/// Smooth even cutoff: 1 on |eta| <= inner, 0 on |eta| >= outer.
struct CutoffSpec {
  double inner = 0.0;
  double outer = 0.0;

  /// inner = pi / period, outer = 2 pi / period.
  static CutoffSpec for_period(double period);
};

/// chi(eta) = h(1 - r) / (h(1 - r) + h(r)), r = (|eta| - inner) / (outer - inner),
/// h(s) = exp(-1/s) for s > 0 and 0 otherwise.
double cutoff_value(double eta, const CutoffSpec& c);
double cutoff_derivative(double eta, const CutoffSpec& c);

/// M(k, xi) = (1 - delta(k)) / (|xi|^2 - k^2 + i lambda k |xi|^2).
std::complex<double> eval_M(double k, const Vec3& xi, const SymbolParams& p);

/// m(eta, xi) = (1 - chi(eta)) / (|xi|^2 - eta^2 + i lambda eta |xi|^2).
std::complex<double> eval_m(double eta, const Vec3& xi, const SymbolParams& p, const CutoffSpec& c);

/// Exponent pattern (e1, e2, e3, e4) in {0,1}^4; e4 belongs to eta.
using Pattern = std::array<int, 4>;

/// xi1^e1 xi2^e2 xi3^e3 eta^e4 d_1^e1 d_2^e2 d_3^e3 d_eta^e4 m, by analytic
/// differentiation of the rational expression.
std::complex<double> marcinkiewicz_product(const Pattern& eps, double eta, const Vec3& xi,
                                           const SymbolParams& p, const CutoffSpec& c);

struct SampleSpec {
  int log_points = 48;        // per axis, over [10^lo, 10^hi] * (2 pi / period)
  double decade_lo = -3.0;
  double decade_hi = 3.0;
  int band_points = 96;       // linear refinement of eta over [inner, outer]
};

struct PatternRow {
  Pattern eps{};
  double grid_sup = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  bool uses_c2 = false;
  std::string bound_expression;
};

struct MarcinkiewiczReport {
  SymbolParams params;
  double c0 = 0.0;  // grid sup of |m|
  double c1 = 0.0;  // min(1, tau^2 / (lambda^2 pi^2))
  double c2 = 0.0;  // estimated over the transition band
  double c3 = 0.0;  // sqrt(tau^2 / (lambda^2 pi^2) + 1)
  double overall_sup = 0.0;  // estimate of the Marcinkiewicz constant A
  std::vector<PatternRow> rows;  // 16 rows, pattern index e1*8 + e2*4 + e3*2 + e4

  bool all_within_bounds() const;
};

double constant_c1(const SymbolParams& p);
double constant_c3(const SymbolParams& p);

/// Grid estimate of every Marcinkiewicz product sup together with the bound
/// chain assembled from c0..c3. Throws Error(GridTooCoarse) when a product
/// changes by more than half its sup between consecutive eta samples of the
/// cutoff transition band.
MarcinkiewiczReport marcinkiewicz_check(const SymbolParams& p, const CutoffSpec& c,
                                        const SampleSpec& sample = {});

/// CSV: epsilon_pattern,grid_sup,bound,ratio,bound_expression
void write_csv(const MarcinkiewiczReport& report, std::ostream& os);

}  // namespace tpwave
