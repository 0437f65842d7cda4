// Serial reference kernels against their OpenMP versions. Set the thread
// count with OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "tpwave/corpus.hpp"
#include "tpwave/kernels.hpp"
#include "tpwave/spectral_ops.hpp"

namespace {

using namespace tpwave;

GridSpec grid_for(const benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  return {n, n, 2.0 * std::numbers::pi, 2.0 * std::numbers::pi};
}

Field sample(const GridSpec& g, std::uint64_t seed) { return random_field(g, {.seed = seed, .kt_max = 3, .kx_max = 3}); }

template <bool Parallel>
void BM_Multiply(benchmark::State& state) {
  const GridSpec g = grid_for(state);
  const Field a = sample(g, 1), b = sample(g, 2);
  std::vector<double> out(g.size());
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::omp::multiply(a.samples(), b.samples(), out);
    else
      kernels::serial::multiply(a.samples(), b.samples(), out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(state.iterations() * 3 * g.size() * sizeof(double));
}

template <bool Parallel>
void BM_PowerSum(benchmark::State& state) {
  const GridSpec g = grid_for(state);
  const Field a = sample(g, 3);
  for (auto _ : state) {
    double s = Parallel ? kernels::omp::power_sum(a.samples(), 2.75) : kernels::serial::power_sum(a.samples(), 2.75);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * g.size());
}

template <bool Parallel>
void BM_TimeMean(benchmark::State& state) {
  const GridSpec g = grid_for(state);
  const Field a = sample(g, 4);
  std::vector<double> plane(g.plane_size());
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::omp::time_mean(g, a.samples(), plane);
    else
      kernels::serial::time_mean(g, a.samples(), plane);
    benchmark::DoNotOptimize(plane.data());
  }
  state.SetItemsProcessed(state.iterations() * g.size());
}

template <bool Parallel>
void BM_DampedWaveSymbol(benchmark::State& state) {
  const GridSpec g = grid_for(state);
  const Field a = sample(g, 5);
  const Spectrum base = a.spectrum();
  auto symbol = [](double k, double x1, double x2, double x3) { return damped_wave_symbol(1.0, k, x1, x2, x3); };
  for (auto _ : state) {
    state.PauseTiming();
    Spectrum s = base;
    state.ResumeTiming();
    if constexpr (Parallel)
      kernels::omp::apply_symbol(g, s.data(), symbol);
    else
      kernels::serial::apply_symbol(g, s.data(), symbol);
    benchmark::DoNotOptimize(s.data().data());
  }
  state.SetItemsProcessed(state.iterations() * g.spectral_size());
}


}  // namespace

BENCHMARK(BM_Multiply<false>)->Arg(16)->Arg(32)->Name("multiply/serial");
BENCHMARK(BM_Multiply<true>)->Arg(16)->Arg(32)->Name("multiply/omp");
BENCHMARK(BM_PowerSum<false>)->Arg(16)->Arg(32)->Name("power_sum/serial");
BENCHMARK(BM_PowerSum<true>)->Arg(16)->Arg(32)->Name("power_sum/omp");
BENCHMARK(BM_TimeMean<false>)->Arg(16)->Arg(32)->Name("time_mean/serial");
BENCHMARK(BM_TimeMean<true>)->Arg(16)->Arg(32)->Name("time_mean/omp");
BENCHMARK(BM_DampedWaveSymbol<false>)->Arg(16)->Arg(32)->Name("apply_symbol/serial");
BENCHMARK(BM_DampedWaveSymbol<true>)->Arg(16)->Arg(32)->Name("apply_symbol/omp");

BENCHMARK_MAIN();
