#include "lanslab/lans/initial_data.hpp"

#include <cmath>

#include "lanslab/spectral/fft.hpp"
#include "lanslab/spectral/random_fields.hpp"

namespace lanslab::lans {

SpectralField taylor_green(const Grid& grid, double amplitude) {
  const int n = grid.dimension();
  auto real = RealField::sample(grid, n, [&](const std::array<double, 3>& x, int c) {
    const double z = n == 3 ? std::cos(x[2]) : 1.0;
    if (c == 0) return amplitude * std::sin(x[0]) * std::cos(x[1]) * z;
    if (c == 1) return -amplitude * std::cos(x[0]) * std::sin(x[1]) * z;
    return 0.0;
  });
  return spectral::to_spectral(real);
}

SpectralField shear_flow(const Grid& grid, double amplitude) {
  auto real = RealField::sample(grid, grid.dimension(), [&](const std::array<double, 3>& x, int c) {
    return c == 0 ? amplitude * std::sin(x[1]) : 0.0;
  });
  return spectral::to_spectral(real);
}

SpectralField zero_velocity(const Grid& grid) { return SpectralField::vector(grid); }

SpectralField random_solenoidal(std::uint64_t seed, const Grid& grid, double amplitude, double max_radius,
                                double decay) {
  spectral::RandomFieldOptions opts;
  opts.components = grid.dimension();
  opts.shell = {0.5, max_radius};
  opts.decay = decay;
  opts.divergence_free = true;
  auto u = spectral::random_field(seed, grid, opts);
  const double norm = spectral::l2_norm(u);
  if (norm > 0.0) u *= amplitude / norm;
  return u;
}

}  // namespace lanslab::lans
