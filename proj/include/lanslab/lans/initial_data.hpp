#pragma once

#include <cstdint>

#include "lanslab/spectral/field.hpp"

namespace lanslab::lans {

using spectral::Grid;
using spectral::RealField;
using spectral::SpectralField;

/// A (sin x cos y cos z, -cos x sin y cos z, 0) in 3D, A (sin x cos y, -cos x sin y) in 2D.
SpectralField taylor_green(const Grid& grid, double amplitude);
/// A (sin y, 0, 0): a steady unidirectional shear.
SpectralField shear_flow(const Grid& grid, double amplitude = 1.0);
SpectralField zero_velocity(const Grid& grid);
/// Divergence-free random field with spectrum in 0 < |k| < max_radius,
/// decaying like (1 + |k|^2)^(-decay/2), rescaled to L^2 norm `amplitude`.
SpectralField random_solenoidal(std::uint64_t seed, const Grid& grid, double amplitude, double max_radius,
                                double decay = 2.0);

}  // namespace lanslab::lans
