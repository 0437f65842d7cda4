#pragma once

#include <cstdint>

#include "tpwave/field.hpp"

namespace tpwave {

/// Random band-limited real fields. The coefficients depend only on the
/// seed and the band, not on the grid, so the same spec sampled on two
/// resolutions gives the same continuous function.
struct CorpusSpec {
  std::uint64_t seed = 1;
  int kt_max = 3;  // largest |time mode|; must stay below n_t/2
  int kx_max = 3;  // largest |space mode| per axis; must stay below n_x/2
  bool time_mean_free = true;    // no k = 0 modes
  bool space_mean_free = true;   // no xi = 0 modes
  double amplitude = 1.0;        // root-mean-square value of the field

  bool operator==(const CorpusSpec&) const = default;
};

Field random_field(const GridSpec& grid, const CorpusSpec& spec);

}  // namespace tpwave
