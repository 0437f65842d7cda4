#include "tpwave/corpus.hpp"

#include <cmath>
#include <random>

#include "tpwave/errors.hpp"
#include "tpwave/transform.hpp"

namespace tpwave {

Field random_field(const GridSpec& grid, const CorpusSpec& spec) {
  grid.validate();
  if (spec.kt_max < 0 || spec.kx_max < 0 || 2 * spec.kt_max >= grid.n_t || 2 * spec.kx_max >= grid.n_x) {
    throw Error(ErrorKind::InvalidArgument, "corpus band must stay below the Nyquist modes");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Spectrum s(grid);
  double energy = 0.0;
  const int K = spec.kx_max;
  // Canonical order over the band; one draw pair per mode whether or not it
  // is kept, so the coefficients are independent of the flags' neighbours.
  for (int kt = -spec.kt_max; kt <= spec.kt_max; ++kt)
    for (int k1 = -K; k1 <= K; ++k1)
      for (int k2 = -K; k2 <= K; ++k2)
        for (int k3 = -K; k3 <= K; ++k3) {
          const double re = unit(rng), im = unit(rng);
          // Keep the lexicographically positive member of each pair.
          const std::array<int, 4> m{kt, k1, k2, k3};
          int first = 0;
          for (int c : m)
            if (c != 0) {
              first = c;
              break;
            }
          if (first < 0) continue;
          if (spec.time_mean_free && kt == 0) continue;
          if (spec.space_mean_free && k1 == 0 && k2 == 0 && k3 == 0) continue;
          const double decay = 1.0 / (1.0 + kt * kt + k1 * k1 + k2 * k2 + k3 * k3);
          const cplx c = first == 0 ? cplx{re * decay, 0.0} : cplx{re * decay, im * decay};
          energy += (first == 0 ? 1.0 : 2.0) * std::norm(c);
          s.set_mode(kt, k1, k2, k3, c);
          if (first != 0) s.set_mode(-kt, -k1, -k2, -k3, std::conj(c));
        }
  if (energy > 0.0) {
    const double scale = spec.amplitude / std::sqrt(energy);
    for (auto& c : s.data()) c *= scale;
  }
  return inverse_transform(s);
}

}  // namespace tpwave
