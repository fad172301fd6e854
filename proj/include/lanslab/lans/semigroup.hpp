#pragma once

#include <vector>

#include "lanslab/lans/trajectory.hpp"

namespace lanslab::lans {

/// Gamma(t) phi = e^{t nu Delta} phi. Throws std::invalid_argument for t < 0.
SpectralField semigroup_apply(const SpectralField& phi, double t, double nu);

/// G.g(t) = int_0^t e^{(t-s) nu Delta} g(s) ds.
///
/// Between consecutive samples g is replaced by the cubic Lagrange
/// interpolant through the four nearest samples (fewer when the trajectory is
/// shorter), and each interval is integrated against the exact exponential
/// kernel with `quadrature_nodes` Gauss-Legendre points. The error is
/// O(h^4) in the sample spacing h for smooth g. The first sample must sit at
/// t = 0; t beyond the last sample throws std::out_of_range.
SpectralField duhamel_apply(const Trajectory& g, double t, double nu, int quadrature_nodes = 16);

/// G.g at every sample time of g, by the recursion
/// G(t_{i+1}) = e^{h nu Delta} G(t_i) + int_{t_i}^{t_{i+1}} ...
std::vector<SpectralField> duhamel_series(const Trajectory& g, double nu, int quadrature_nodes = 16);

}  // namespace lanslab::lans
