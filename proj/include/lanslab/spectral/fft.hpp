#pragma once

#include "lanslab/spectral/field.hpp"

namespace lanslab::spectral {

/// Forward transform with normalized measure: f_hat(k) = mean_x f(x) e^{-ik.x}.
SpectralField to_spectral(const RealField& f);

/// Inverse of to_spectral: f(x) = sum_k f_hat(k) e^{ik.x}.
RealField to_real(const SpectralField& f);

}  // namespace lanslab::spectral
