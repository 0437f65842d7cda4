#pragma once

#include <iosfwd>
#include <vector>

#include "tpwave/field.hpp"

namespace tpwave {

struct DampingRow {
  int k_index = 0;             // |signed time mode|
  double k = 0.0;              // angular frequency
  double forcing_mass = 0.0;   // sum of |f^(k, xi)|^2 over xi and +-k
  double solution_mass = 0.0;
  double ratio = 0.0;          // solution_mass / forcing_mass
  double envelope = 0.0;       // grid sup of the squared |M| envelopes (1/|xi|^4 for k = 0)
};

struct ModeDampingTable {
  std::vector<DampingRow> rows;  // only time frequencies where f carries mass
};

/// Per-time-frequency masses of f and u. The lambda enters only the envelope.
ModeDampingTable mode_damping_report(const Field& f, const Field& u, double lambda);

void write_csv(std::ostream& os, const ModeDampingTable& t);

}  // namespace tpwave
