#include "tpwave/damping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "tpwave/errors.hpp"

namespace tpwave {

namespace {

std::vector<double> masses_by_time_mode(const Spectrum& s) {
  const GridSpec& g = s.grid();
  const int nh = g.n_half();
  std::vector<double> m(g.n_t / 2 + 1, 0.0);
  for (int a = 0; a < g.n_t; ++a) {
    const int kt = std::abs(signed_mode(a, g.n_t));
    for (int i = 0; i < g.n_x; ++i)
      for (int j = 0; j < g.n_x; ++j)
        for (int l = 0; l < nh; ++l) {
          const double mult = (l == 0 || 2 * l == g.n_x) ? 1.0 : 2.0;
          m[kt] += mult * std::norm(s.stored(a, i, j, l));
        }
  }
  return m;
}

double envelope(const GridSpec& g, double k, double lambda) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  double best = 0.0;
  const int nh = g.n_half();
  for (int i = 0; i < g.n_x; ++i)
    for (int j = 0; j < g.n_x; ++j)
      for (int l = 0; l < nh; ++l) {
        const double x1 = g.space_freq(i), x2 = g.space_freq(j), x3 = g.space_freq(l);
        const double q = x1 * x1 + x2 * x2 + x3 * x3;
        if (q == 0.0) continue;
        double e;
        if (k == 0.0) {
          e = 1.0 / q;
        } else {
          const double damped = 1.0 / (lambda * k * q);
          const double gap = std::abs(q - k * k);
          e = std::min(damped, gap > 0.0 ? 1.0 / gap : inf);
        }
        best = std::max(best, e * e);
      }
  return best;
}

}  // namespace

ModeDampingTable mode_damping_report(const Field& f, const Field& u, double lambda) {
  if (!(f.grid() == u.grid())) throw Error(ErrorKind::InvalidArgument, "damping report needs matching grids");
  const GridSpec& g = f.grid();
  const auto fm = masses_by_time_mode(f.spectrum());
  const auto um = masses_by_time_mode(u.spectrum());
  const double floor = 1e-24 * *std::max_element(fm.begin(), fm.end());
  ModeDampingTable t;
  for (std::size_t kt = 0; kt < fm.size(); ++kt) {
    if (!(fm[kt] > floor)) continue;
    DampingRow r;
    r.k_index = int(kt);
    r.k = kt * g.time_fundamental();
    r.forcing_mass = fm[kt];
    r.solution_mass = um[kt];
    r.ratio = um[kt] / fm[kt];
    r.envelope = envelope(g, r.k, lambda);
    t.rows.push_back(r);
  }
  return t;
}

void write_csv(std::ostream& os, const ModeDampingTable& t) {
  os << "k_index,k,forcing_mass,solution_mass,ratio,envelope\n";
  os.precision(17);
  for (const auto& r : t.rows) {
    os << r.k_index << ',' << r.k << ',' << r.forcing_mass << ',' << r.solution_mass << ',' << r.ratio << ','
       << r.envelope << '\n';
  }
}

}  // namespace tpwave
