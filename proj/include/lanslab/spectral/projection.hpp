#pragma once

#include "lanslab/spectral/field.hpp"

namespace lanslab::spectral {

/// (1 - alpha^2 Delta)^{-1} f, i.e. the multiplier 1 / (1 + alpha^2 |k|^2).
SpectralField helmholtz_inverse(const SpectralField& f, double alpha);
/// (1 - alpha^2 Delta) f.
SpectralField helmholtz(const SpectralField& f, double alpha);

/// Leray projection: u_hat(k) - k (k . u_hat(k)) / |k|^2 for k != 0. The mean
/// (k = 0) is left untouched.
SpectralField leray_project(const SpectralField& f);
RealField leray_project(const RealField& f);

/// Stokes projector P^alpha(w) = w - (1 - alpha^2 Delta)^{-1} grad p, where p
/// solves (1 - alpha^2 Delta) v + grad p = (1 - alpha^2 Delta) w with div v = 0.
///
/// Computed through the pressure: p_hat = -i (1 + alpha^2 |k|^2) (k . w_hat) / |k|^2.
/// On the torus this coincides with leray_project for every alpha.
SpectralField stokes_project(const SpectralField& f, double alpha);

/// Stokes pressure p_hat for the problem above (scalar field, zero mean).
SpectralField stokes_pressure(const SpectralField& f, double alpha);

}  // namespace lanslab::spectral
