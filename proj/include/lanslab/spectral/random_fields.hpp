#pragma once

#include <cstdint>

#include "lanslab/spectral/field.hpp"

namespace lanslab::spectral {

/// Open frequency shell lower < |k| < upper.
struct Shell {
  double lower = 0.0;
  double upper = 0.0;
};

struct RandomFieldOptions {
  int components = 1;
  Shell shell;
  /// Coefficient amplitudes are scaled by (1 + |k|^2)^(-decay/2).
  double decay = 0.0;
  /// When nonzero, each component gets a mean drawn uniformly from [-mean, mean)
  /// after all other coefficients.
  double mean = 0.0;
  /// Leray-project the result (vector fields only).
  bool divergence_free = false;
};

/// Random real field with spectrum inside the shell.
///
/// Coefficients are drawn in a canonical order over wavevectors, independent
/// of N, so the same seed yields the same trigonometric polynomial on every
/// grid that resolves the shell. Fully determined by the seed.
SpectralField random_field(std::uint64_t seed, const Grid& grid, const RandomFieldOptions& opts);

/// Random vector field with spectrum in the dyadic annulus 2^(j-1) < |k| < 2^(j+1).
/// Throws std::invalid_argument when 2^(j+1) exceeds the Nyquist frequency.
SpectralField random_band_limited(std::uint64_t seed, int j, const Grid& grid);

}  // namespace lanslab::spectral
