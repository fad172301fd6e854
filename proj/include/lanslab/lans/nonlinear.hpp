#pragma once

#include "lanslab/spectral/field.hpp"

namespace lanslab::lans {

using spectral::SpectralField;

/// Def(u) Rot(u) at every grid point, dealiased; n x n row-major tensor.
/// With G_ij = d_j u_i, Def = (G + G^T)/2 and Rot = (G - G^T)/2. The product
/// is not symmetric in general.
SpectralField def_rot_product(const SpectralField& u);

/// tau^alpha u = alpha^2 (1 - alpha^2 Delta)^{-1} [Def(u) Rot(u)].
SpectralField reynolds_stress(const SpectralField& u, double alpha);
/// div tau^alpha u, row-wise.
SpectralField reynolds_stress_divergence(const SpectralField& u, double alpha);

/// u_i u_j, dealiased.
SpectralField momentum_flux(const SpectralField& u);

/// V^alpha(u) = div(u (x) u) + div tau^alpha(u), unprojected.
SpectralField nonlinearity_V(const SpectralField& u, double alpha);
/// P^alpha V^alpha(u).
SpectralField projected_nonlinearity(const SpectralField& u, double alpha);

}  // namespace lanslab::lans
