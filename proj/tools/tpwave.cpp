// Command-line front end: solves, multiplier checks, verification suites,
// damping reports and parameter sweeps.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "tpwave/config.hpp"
#include "tpwave/csv.hpp"
#include "tpwave/damping.hpp"
#include "tpwave/errors.hpp"
#include "tpwave/field_io.hpp"
#include "tpwave/halfspace.hpp"
#include "tpwave/kernels.hpp"
#include "tpwave/kuznetsov.hpp"
#include "tpwave/linear_solver.hpp"
#include "tpwave/symbols.hpp"
#include "tpwave/verify.hpp"

using namespace tpwave;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitDiverged = 3;
constexpr int kExitNumerical = 4;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NonHermitianInput:
    case ErrorKind::GridTooCoarse:
      return kExitNumerical;
    case ErrorKind::Io:
      return kExitValidation;
    default:
      return kExitValidation;
  }
}

struct Common {
  std::string config;
  std::string out;
  int threads = 0;
  std::uint64_t seed = 1;
};

RunConfig load(const Common& c) {
  RunConfig cfg = c.config.empty() ? RunConfig{} : load_config(c.config);
  if (!c.out.empty()) cfg.output.dir = c.out;
  return cfg;
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.output.dir) / name).string();
}

LinearSolveResult linear_solve(const ProblemSpec& spec, const RunConfig& cfg) {
  if (spec.domain == Domain::PeriodicBox) {
    LinearSolveOptions opts;
    opts.drop_zero_mode = cfg.solver.drop_zero_mode;
    return solve_box(spec.forcing, spec.params, opts);
  }
  return solve_halfspace(spec);
}

void write_solution(const RunConfig& cfg, const SolutionDecomposition& d) {
  if (!cfg.output.write_fields) return;
  write_field(out_path(cfg, "u_s.tpwf"), d.steady);
  write_field(out_path(cfg, "u_p.tpwf"), d.periodic);
}

int cmd_solve_linear(const Common& c) {
  const RunConfig cfg = load(c);
  const ProblemSpec spec = cfg.build_problem();
  const LinearSolveResult r = linear_solve(spec, cfg);
  write_solution(cfg, r.decomposition);
  nlohmann::json summary = {{"residual_norm", r.residual_norm},
                            {"trace_error", r.trace_error},
                            {"steady_zero_mode_dropped", r.steady_zero_mode_dropped}};
  write_file_atomic(out_path(cfg, "summary.json"), summary.dump(2) + "\n");
  std::cout << summary.dump() << '\n';
  return kExitOk;
}

void write_trace(const RunConfig& cfg, const IterationTrace& t) {
  CsvTable csv({"iteration", "diff_norm", "iterate_norm", "residual", "ratio"});
  for (const auto& r : t.records) csv.row() << r.iteration << r.diff_norm << r.iterate_norm << r.residual << r.ratio;
  csv.save(out_path(cfg, "trace.csv"));
}

int cmd_solve_kuznetsov(const Common& c) {
  const RunConfig cfg = load(c);
  const ProblemSpec spec = cfg.build_problem();
  const KuznetsovResult res = solve_kuznetsov(spec, cfg.solver.fixed_point);
  write_trace(cfg, res.trace);
  if (!res.trace.warning.empty()) std::cerr << "warning: " << res.trace.warning << '\n';
  std::cout << "status " << to_string(res.trace.status) << ", iterations " << res.trace.records.size()
            << ", residual " << res.trace.final_residual << '\n';
  if (res.trace.status == IterationStatus::Diverged) {
    std::cerr << "iteration diverged; trace written to " << out_path(cfg, "trace.csv") << '\n';
    return kExitDiverged;
  }
  write_solution(cfg, res.decomposition);
  return kExitOk;
}

int cmd_check_multiplier(const Common& c, double lambda, double period) {
  RunConfig cfg = load(c);
  if (lambda <= 0.0) lambda = cfg.lambda;
  if (period <= 0.0) period = cfg.grid.period;
  const SymbolParams p{lambda, period};
  const MarcinkiewiczReport rep = marcinkiewicz_check(p, CutoffSpec::for_period(period));
  std::ostringstream os;
  write_csv(rep, os);
  write_file_atomic(out_path(cfg, "marcinkiewicz.csv"), os.str());
  std::cout << os.str();
  if (!rep.all_within_bounds()) {
    std::cerr << "a Marcinkiewicz product exceeds its bound\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& suite, int n) {
  const auto results = run_suite(suite, c.seed, n);
  bool ok = true;
  for (const auto& r : results) {
    std::printf("%s %-34s %.3e (limit %.1e)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.value, r.threshold);
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitNumerical;
}

int cmd_damping(const Common& c) {
  const RunConfig cfg = load(c);
  const ProblemSpec spec = cfg.build_problem();
  const LinearSolveResult r = linear_solve(spec, cfg);
  const ModeDampingTable t = mode_damping_report(spec.forcing, r.decomposition.total(), cfg.lambda);
  std::ostringstream os;
  write_csv(os, t);
  write_file_atomic(out_path(cfg, "damping.csv"), os.str());
  std::cout << os.str();
  for (const auto& row : t.rows)
    if (row.ratio > row.envelope * (1.0 + 1e-12)) {
      std::cerr << "mode " << row.k_index << " exceeds its damping envelope\n";
      return kExitNumerical;
    }
  return kExitOk;
}

int cmd_sweep(const Common& c) {
  const RunConfig base = load(c);
  SweepConfig sw = base.sweep.value_or(SweepConfig{});
  if (sw.lambda.empty()) sw.lambda = {base.lambda};
  if (sw.period.empty()) sw.period = {base.grid.period};
  if (sw.amplitude.empty()) sw.amplitude = {1.0};
  CsvTable csv({"lambda", "period", "amplitude", "status", "iterations", "max_ratio", "final_residual"});
  for (double lambda : sw.lambda)
    for (double period : sw.period)
      for (double amp : sw.amplitude) {
        RunConfig cfg = base;
        cfg.lambda = lambda;
        cfg.grid.period = period;
        ProblemSpec spec = cfg.build_problem();
        spec.forcing = amp * spec.forcing;
        if (spec.boundary_data)
          for (double& v : spec.boundary_data->samples) v *= amp;
        const KuznetsovResult res = solve_kuznetsov(spec, cfg.solver.fixed_point);
        csv.row() << lambda << period << amp << std::string(to_string(res.trace.status))
                  << int(res.trace.records.size()) << res.trace.max_ratio() << res.trace.final_residual;
      }
  csv.save(out_path(base, "sweep.csv"));
  std::cout << csv.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-periodic damped wave and Kuznetsov solver"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--config", c.config, "JSON run configuration");
    sub->add_option("--out", c.out, "output directory (overrides output.dir)");
    sub->add_option("--threads", c.threads, "OpenMP threads (0 keeps the default)");
    sub->add_option("--seed", c.seed, "seed for random-corpus cases");
  };

  auto* solve_linear = app.add_subcommand("solve-linear", "linear solve of the configured problem");
  auto* solve_kz = app.add_subcommand("solve-kuznetsov", "fixed-point solve of the Kuznetsov problem");
  auto* check = app.add_subcommand("check-multiplier", "Marcinkiewicz products against their bounds");
  auto* verify = app.add_subcommand("verify", "manufactured-solution suites");
  auto* damping = app.add_subcommand("damping-report", "per-time-frequency damping table");
  auto* sweep = app.add_subcommand("sweep", "Kuznetsov solves over lambda, period and amplitude");
  for (auto* s : {solve_linear, solve_kz, check, verify, damping, sweep}) add_common(s);

  double lambda = 0.0, period = 0.0;
  check->add_option("--lambda", lambda, "damping (default from config)");
  check->add_option("--period", period, "period (default from config)");
  std::string suite = "all";
  int n = 16;
  verify->add_option("--suite", suite, "linear, kuznetsov or all")->check(CLI::IsMember({"linear", "kuznetsov", "all"}));
  verify->add_option("--n", n, "grid points per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  if (c.threads > 0) kernels::set_threads(c.threads);
  try {
    if (*solve_linear) return cmd_solve_linear(c);
    if (*solve_kz) return cmd_solve_kuznetsov(c);
    if (*check) return cmd_check_multiplier(c, lambda, period);
    if (*verify) return cmd_verify(c, suite, n);
    if (*damping) return cmd_damping(c);
    if (*sweep) return cmd_sweep(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
