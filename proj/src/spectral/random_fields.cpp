#include "lanslab/spectral/random_fields.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "lanslab/spectral/projection.hpp"

namespace lanslab::spectral {
namespace {

// Uniform on [-1, 1) from the raw engine output; avoids the
// implementation-defined std::uniform_real_distribution.
double symmetric_unit(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

bool in_positive_half(const WaveVector& k, int dim) {
  for (int d = 0; d < dim; ++d) {
    if (k[d] != 0) return k[d] > 0;
  }
  return false;
}

}  // namespace

SpectralField random_field(std::uint64_t seed, const Grid& grid, const RandomFieldOptions& opts) {
  const int dim = grid.dimension();
  const Shell& shell = opts.shell;
  if (!(shell.upper > shell.lower) || shell.lower < 0.0) {
    throw std::invalid_argument("random field shell must satisfy 0 <= lower < upper");
  }
  const int reach = static_cast<int>(std::ceil(shell.upper)) - 1;
  if (reach >= grid.nyquist()) {
    throw std::invalid_argument("random field shell upper bound " + std::to_string(shell.upper) +
                                " reaches the Nyquist frequency of N=" + std::to_string(grid.points()));
  }

  SpectralField f(grid, opts.components);
  std::mt19937_64 rng(seed);
  WaveVector k{};
  const int span = 2 * reach + 1;
  const int total = dim == 2 ? span * span : span * span * span;
  for (int flat = 0; flat < total; ++flat) {
    int rem = flat;
    for (int d = dim - 1; d >= 0; --d) {
      k[d] = rem % span - reach;
      rem /= span;
    }
    if (!in_positive_half(k, dim)) continue;
    const double r = std::sqrt(static_cast<double>(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]));
    if (!(r > shell.lower && r < shell.upper)) continue;
    const double amp = std::pow(1.0 + r * r, -0.5 * opts.decay);
    for (int c = 0; c < opts.components; ++c) {
      const double re = symmetric_unit(rng);
      const double im = symmetric_unit(rng);
      f.set_coefficient(c, k, amp * Complex(re, im));
    }
  }
  if (opts.mean != 0.0) {
    for (int c = 0; c < opts.components; ++c) f.set_coefficient(c, {0, 0, 0}, opts.mean * symmetric_unit(rng));
  }
  if (opts.divergence_free) {
    if (opts.components != dim) throw std::invalid_argument("divergence-free option needs a vector field");
    f = leray_project(f);
  }
  return f;
}

SpectralField random_band_limited(std::uint64_t seed, int j, const Grid& grid) {
  if (j < 0) throw std::invalid_argument("dyadic index must be non-negative");
  const double upper = std::ldexp(1.0, j + 1);
  if (upper > grid.nyquist()) {
    throw std::invalid_argument("annulus A_" + std::to_string(j) + " exceeds the Nyquist frequency");
  }
  RandomFieldOptions opts;
  opts.components = grid.dimension();
  opts.shell = {std::ldexp(1.0, j - 1), upper};
  return random_field(seed, grid, opts);
}

}  // namespace lanslab::spectral
