#include "tpwave/transform.hpp"

#include <fftw3.h>
#include <omp.h>

#include <map>
#include <mutex>
#include <tuple>

#include "tpwave/errors.hpp"

namespace tpwave {

namespace {

struct Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// FFTW planning is not thread-safe; execution with new-array functions is.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  Plans get(const GridSpec& g) {
    std::lock_guard lock(mutex_);
    const int nthreads = omp_get_max_threads();
    const auto key = std::make_tuple(g.n_t, g.n_x, nthreads);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;

    if (!threads_ready_) {
      fftw_init_threads();
      threads_ready_ = true;
    }
    fftw_plan_with_nthreads(nthreads);
    const int dims[4] = {g.n_t, g.n_x, g.n_x, g.n_x};
    std::vector<double> real(g.size());
    std::vector<cplx> spec(g.spectral_size());
    auto* cbuf = reinterpret_cast<fftw_complex*>(spec.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    Plans p;
    p.forward = fftw_plan_dft_r2c(4, dims, real.data(), cbuf, flags);
    p.backward = fftw_plan_dft_c2r(4, dims, cbuf, real.data(), flags);
    if (!p.forward || !p.backward) throw Error(ErrorKind::InvalidGrid, "FFTW planning failed");
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mutex_;
  bool threads_ready_ = false;
  std::map<std::tuple<int, int, int>, Plans> plans_;

 public:
  // Serial 3D r2c plan over a (t, x1, x2) boundary plane.
  fftw_plan boundary(const GridSpec& g) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(g.n_t, g.n_x);
    if (auto it = boundary_plans_.find(key); it != boundary_plans_.end()) return it->second;
    if (!threads_ready_) {
      fftw_init_threads();
      threads_ready_ = true;
    }
    fftw_plan_with_nthreads(1);
    const int dims[3] = {g.n_t, g.n_x, g.n_x};
    std::vector<double> real(std::size_t(g.n_t) * g.n_x * g.n_x);
    std::vector<cplx> spec(std::size_t(g.n_t) * g.n_x * (g.n_x / 2 + 1));
    fftw_plan p = fftw_plan_dft_r2c(3, dims, real.data(), reinterpret_cast<fftw_complex*>(spec.data()),
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw Error(ErrorKind::InvalidGrid, "FFTW planning failed");
    boundary_plans_.emplace(key, p);
    return p;
  }

 private:
  std::map<std::pair<int, int>, fftw_plan> boundary_plans_;
};

}  // namespace

namespace detail {

Spectrum compute_forward(const Field& f) {
  const GridSpec& g = f.grid();
  Spectrum out(g);
  const Plans plans = PlanCache::instance().get(g);
  // r2c leaves its input intact, but the API takes a non-const pointer.
  auto* in = const_cast<double*>(f.samples().data());
  fftw_execute_dft_r2c(plans.forward, in, reinterpret_cast<fftw_complex*>(out.data().data()));
  const double scale = 1.0 / static_cast<double>(g.size());
  for (auto& c : out.data()) c *= scale;
  return out;
}

Field synthesize(const Spectrum& coeffs) {
  const GridSpec& g = coeffs.grid();
  const Plans plans = PlanCache::instance().get(g);
  std::vector<cplx> scratch(coeffs.data().begin(), coeffs.data().end());
  std::vector<double> out(g.size());
  fftw_execute_dft_c2r(plans.backward, reinterpret_cast<fftw_complex*>(scratch.data()), out.data());
  return Field(g, std::move(out));
}

std::vector<cplx> plane_forward(const GridSpec& g, std::span<const double> plane) {
  const std::size_t n = std::size_t(g.n_t) * g.n_x * g.n_x;
  if (plane.size() != n) throw Error(ErrorKind::InvalidArgument, "boundary plane has the wrong size");
  std::vector<cplx> out(std::size_t(g.n_t) * g.n_x * (g.n_x / 2 + 1));
  fftw_execute_dft_r2c(PlanCache::instance().boundary(g), const_cast<double*>(plane.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
  const double scale = 1.0 / static_cast<double>(n);
  for (auto& c : out) c *= scale;
  return out;
}

}  // namespace detail

Spectrum forward_transform(const Field& f) { return f.spectrum(); }

Field inverse_transform(const Spectrum& coeffs) {
  const double scale = std::max(coeffs.max_abs(), 1e-300);
  const double defect = coeffs.hermitian_defect();
  if (defect > kHermitianTolerance * scale) {
    throw Error(ErrorKind::NonHermitianInput,
                "Hermitian symmetry violated by " + std::to_string(defect / scale) + " (relative)");
  }
  return detail::synthesize(coeffs);
}

}  // namespace tpwave
