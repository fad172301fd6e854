#include "lanslab/spectral/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace lanslab::spectral {
namespace {

// Plans are created once per grid shape under a lock (the FFTW planner is not
// thread-safe) and then executed through the new-array interface, which is.
struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plans] : plans_) {
      fftw_destroy_plan(plans.forward);
      fftw_destroy_plan(plans.backward);
    }
  }

  const PlanPair& get(const Grid& grid) {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(grid.dimension(), grid.points());
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    int dims[3] = {grid.points(), grid.points(), grid.points()};
    RealArray real(grid.real_size());
    ComplexArray spec(grid.spectral_size());
    auto* cplx = reinterpret_cast<fftw_complex*>(spec.data());
    // FFTW_ESTIMATE keeps plan selection, and therefore round-off, reproducible.
    PlanPair p;
    p.forward = fftw_plan_dft_r2c(grid.dimension(), dims, real.data(), cplx, FFTW_ESTIMATE);
    p.backward = fftw_plan_dft_c2r(grid.dimension(), dims, cplx, real.data(), FFTW_ESTIMATE);
    if (p.forward == nullptr || p.backward == nullptr) {
      throw std::runtime_error("FFTW failed to create a plan");
    }
    return plans_.emplace(key, p).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, PlanPair> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

}  // namespace

SpectralField to_spectral(const RealField& f) {
  const Grid& grid = f.grid();
  const PlanPair& plans = plan_cache().get(grid);
  SpectralField out(grid, f.components());
  const double norm = 1.0 / static_cast<double>(grid.real_size());
  for (int c = 0; c < f.components(); ++c) {
    // Out-of-place r2c leaves its input intact.
    auto dst = out.component(c);
    fftw_execute_dft_r2c(plans.forward, const_cast<double*>(f.component(c).data()),
                         reinterpret_cast<fftw_complex*>(dst.data()));
    for (auto& v : dst) v *= norm;
  }
  return out;
}

RealField to_real(const SpectralField& f) {
  const Grid& grid = f.grid();
  const PlanPair& plans = plan_cache().get(grid);
  RealField out(grid, f.components());
  // c2r overwrites its input, so each component goes through a copy.
  ComplexArray scratch(grid.spectral_size());
  for (int c = 0; c < f.components(); ++c) {
    auto src = f.component(c);
    std::copy(src.begin(), src.end(), scratch.begin());
    fftw_execute_dft_c2r(plans.backward, reinterpret_cast<fftw_complex*>(scratch.data()),
                         out.component(c).data());
  }
  return out;
}

}  // namespace lanslab::spectral
