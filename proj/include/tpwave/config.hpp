#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpwave/closed_form.hpp"
#include "tpwave/corpus.hpp"
#include "tpwave/kuznetsov.hpp"
#include "tpwave/model.hpp"

namespace tpwave {

/// Forcing as a closed-form sum plus an optional random band-limited part.
struct ForcingSpec {
  ClosedForm closed_form;
  std::optional<CorpusSpec> random;

  Field build(const GridSpec& grid) const;
  bool operator==(const ForcingSpec&) const = default;
};

/// g = amplitude cos(time_mode t) cos(m1 x1 + m2 x2) in fundamental units.
struct BoundarySpec {
  double amplitude = 0.0;
  int time_mode = 1;
  int m1 = 0;
  int m2 = 0;

  bool operator==(const BoundarySpec&) const = default;
};

struct ProblemConfig {
  Domain domain = Domain::PeriodicBox;
  BoundaryKind bc = BoundaryKind::None;
  ForcingSpec forcing;
  std::optional<BoundarySpec> boundary;

  bool operator==(const ProblemConfig&) const = default;
};

struct SolverConfig {
  FixedPointConfig fixed_point;
  bool drop_zero_mode = false;

  bool operator==(const SolverConfig&) const = default;
};

struct OutputConfig {
  std::string dir = "out";
  bool write_fields = true;
  bool write_tables = true;

  bool operator==(const OutputConfig&) const = default;
};

/// Parameter grid for the `sweep` command; the amplitude multiplies the forcing and boundary data.
struct SweepConfig {
  std::vector<double> lambda;
  std::vector<double> period;
  std::vector<double> amplitude;

  bool operator==(const SweepConfig&) const = default;
};

struct RunConfig {
  GridSpec grid{32, 32, 2.0 * std::numbers::pi, 2.0 * std::numbers::pi};
  double lambda = 1.0;
  double gamma = 1.0;
  ProblemConfig problem;
  SolverConfig solver;
  OutputConfig output;
  std::optional<SweepConfig> sweep;

  ModelParams model() const { return {lambda, gamma, grid.period}; }
  /// Samples the forcing and boundary data. Throws on invalid parameters.
  ProblemSpec build_problem() const;
  void validate() const;

  bool operator==(const RunConfig&) const = default;
};

/// Parses JSON text. Unknown keys and wrong types throw Error(Config) naming
/// the full key path, e.g. "solver.rhoo".
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string to_json(const RunConfig& cfg);

}  // namespace tpwave
