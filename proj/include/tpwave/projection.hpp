#pragma once

#include <vector>

#include "tpwave/field.hpp"

namespace tpwave {

/// Per-point time average over one period, one value per spatial sample.
std::vector<double> time_average(const Field& f);

/// P f: the steady part, constant in t.
Field project_steady(const Field& f);

/// P_perp f = f - P f: the purely periodic part.
Field project_periodic(const Field& f);

/// max |P f| / max(max |f|, floor); zero for mean-free fields.
double steady_fraction(const Field& f);

/// max over t of |f(t) - P f| relative to max |f|; zero for time-constant fields.
double periodic_fraction(const Field& f);

}  // namespace tpwave
