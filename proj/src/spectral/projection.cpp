#include "lanslab/spectral/projection.hpp"

#include <stdexcept>

#include "lanslab/spectral/fft.hpp"
#include "lanslab/spectral/multiplier.hpp"

namespace lanslab::spectral {
namespace {

void require_vector(const SpectralField& f) {
  if (f.components() != f.grid().dimension()) {
    throw std::invalid_argument("projection expects a vector field");
  }
}

}  // namespace

SpectralField helmholtz_inverse(const SpectralField& f, double alpha) {
  return apply_multiplier(MultiplierSymbol::helmholtz_inverse(f.grid(), alpha), f);
}

SpectralField helmholtz(const SpectralField& f, double alpha) {
  return apply_multiplier(MultiplierSymbol::helmholtz(f.grid(), alpha), f);
}

SpectralField leray_project(const SpectralField& f) {
  require_vector(f);
  const Grid& grid = f.grid();
  const auto& lat = grid.lattice();
  const int n = grid.dimension();
  SpectralField out = f;
  const auto size = static_cast<std::ptrdiff_t>(grid.spectral_size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    if (lat.k2[i] == 0) continue;
    Complex dot{};
    for (int d = 0; d < n; ++d) dot += static_cast<double>(lat.k[i][d]) * f.component(d)[i];
    const Complex scaled = dot / static_cast<double>(lat.k2[i]);
    for (int d = 0; d < n; ++d) out.component(d)[i] -= static_cast<double>(lat.k[i][d]) * scaled;
  }
  return out;
}

RealField leray_project(const RealField& f) { return to_real(leray_project(to_spectral(f))); }

SpectralField stokes_pressure(const SpectralField& f, double alpha) {
  require_vector(f);
  const Grid& grid = f.grid();
  const auto& lat = grid.lattice();
  const int n = grid.dimension();
  const double a2 = alpha * alpha;
  SpectralField p = SpectralField::scalar(grid);
  auto pd = p.component(0);
  for (std::size_t i = 0; i < grid.spectral_size(); ++i) {
    if (lat.k2[i] == 0) continue;
    Complex dot{};
    for (int d = 0; d < n; ++d) dot += static_cast<double>(lat.k[i][d]) * f.component(d)[i];
    // i |k|^2 p_hat = (1 + a^2 |k|^2) (k . w_hat)
    pd[i] = Complex(0.0, -1.0) * (1.0 + a2 * lat.k2[i]) * dot / static_cast<double>(lat.k2[i]);
  }
  return p;
}

SpectralField stokes_project(const SpectralField& f, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("alpha must be non-negative");
  require_vector(f);
  const Grid& grid = f.grid();
  const int n = grid.dimension();
  const SpectralField p = stokes_pressure(f, alpha);
  const auto& lat = grid.lattice();
  SpectralField grad_p = SpectralField::vector(grid);
  auto pd = p.component(0);
  for (int d = 0; d < n; ++d) {
    auto gd = grad_p.component(d);
    // Keep Nyquist entries: the gradient must remove the whole longitudinal part.
    for (std::size_t i = 0; i < gd.size(); ++i) gd[i] = Complex(0.0, lat.k[i][d]) * pd[i];
  }
  return f - helmholtz_inverse(grad_p, alpha);
}

}  // namespace lanslab::spectral
