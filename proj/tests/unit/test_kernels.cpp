#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "tpwave/kernels.hpp"
#include "tpwave/spectral_ops.hpp"

using namespace tpwave;
using namespace testutil;

namespace {

std::vector<double> random_vector(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> d;
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("omp kernels agree with the serial reference") {
    const std::size_t n = 3 * kernels::kReductionBlock + 123;
    const auto x = random_vector(n, 1), y = random_vector(n, 2);
    std::vector<double> a(n), b(n);

    kernels::serial::axpby(0.7, x, -1.3, y, a);
    kernels::omp::axpby(0.7, x, -1.3, y, b);
    CHECK(a == b);

    kernels::serial::multiply(x, y, a);
    kernels::omp::multiply(x, y, b);
    CHECK(a == b);

    CHECK(kernels::serial::max_abs(x) == kernels::omp::max_abs(x));
    for (double p : {1.0, 2.0, 2.75}) {
      const double s = kernels::serial::power_sum(x, p);
      CHECK(kernels::omp::power_sum(x, p) == doctest::Approx(s).epsilon(1e-13));
    }
  }

  TEST_CASE("blocked reductions are bit-identical across thread counts") {
    const auto x = random_vector(5 * kernels::kReductionBlock + 7, 3);
    const int before = kernels::threads();
    kernels::set_threads(1);
    const double one = kernels::omp::power_sum(x, 2.75);
    kernels::set_threads(4);
    const double four = kernels::omp::power_sum(x, 2.75);
    kernels::set_threads(before);
    CHECK(one == four);
  }

  TEST_CASE("time mean matches between implementations") {
    const GridSpec g = grid(6, 8);
    const auto x = random_vector(g.size(), 4);
    std::vector<double> a(g.plane_size()), b(g.plane_size());
    kernels::serial::time_mean(g, x, a);
    kernels::omp::time_mean(g, x, b);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == doctest::Approx(b[k]).epsilon(1e-15));
  }

  TEST_CASE("symbol application matches, Nyquist modes included") {
    const GridSpec g = grid(8, 8);
    std::vector<cplx> c(g.spectral_size());
    const auto re = random_vector(c.size(), 5), im = random_vector(c.size(), 6);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = {re[k], im[k]};
    auto a = c, b = c;
    auto sym = [](double k, double x1, double x2, double x3) { return damped_wave_symbol(0.3, k, x1, x2, x3); };
    kernels::serial::apply_symbol(g, a, sym);
    kernels::omp::apply_symbol(g, b, sym);
    CHECK(a == b);
  }

  TEST_CASE("Hermitian symbol is the real part on self-paired modes") {
    const GridSpec g = grid(8, 8);
    auto odd = [](double k, double, double, double) { return cplx{0.0, k}; };
    CHECK(kernels::hermitian_symbol(g, 4, 1, 0, 0, odd) == cplx{0.0, 0.0});
    CHECK(kernels::hermitian_symbol(g, 1, 0, 0, 0, odd) == cplx{0.0, 1.0});
    auto sym = [](double k, double x1, double x2, double x3) { return damped_wave_symbol(1.0, k, x1, x2, x3); };
    const cplx full = sym(g.time_freq(4), g.space_freq(1), 0.0, 0.0);
    CHECK(kernels::hermitian_symbol(g, 4, 1, 0, 0, sym) == cplx{full.real(), 0.0});
  }
}
