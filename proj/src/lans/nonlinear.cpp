#include "lanslab/lans/nonlinear.hpp"

#include <algorithm>
#include <cstddef>

#include "lanslab/spectral/fft.hpp"
#include "lanslab/spectral/multiplier.hpp"
#include "lanslab/spectral/projection.hpp"

namespace lanslab::lans {
namespace {

using spectral::RealField;

// DR_ij = sum_k Def_ik Rot_kj, pointwise.
RealField def_rot_real(const RealField& grad, int n) {
  RealField out(grad.grid(), n * n);
  const auto size = static_cast<std::ptrdiff_t>(grad.grid().real_size());
  std::vector<const double*> g(static_cast<std::size_t>(n * n));
  std::vector<double*> o(static_cast<std::size_t>(n * n));
  for (int c = 0; c < n * n; ++c) {
    g[c] = grad.component(c).data();
    o[c] = out.component(c).data();
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t x = 0; x < size; ++x) {
    double def[3][3], rot[3][3];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const double gij = g[i * n + j][x], gji = g[j * n + i][x];
        def[i][j] = 0.5 * (gij + gji);
        rot[i][j] = 0.5 * (gij - gji);
      }
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += def[i][k] * rot[k][j];
        o[i * n + j][x] = acc;
      }
    }
  }
  return out;
}

// Upper triangle of u_i u_j, (i, j) with i <= j in row order.
RealField outer_upper(const RealField& u, int n) {
  RealField out(u.grid(), n * (n + 1) / 2);
  const auto size = static_cast<std::ptrdiff_t>(u.grid().real_size());
  int c = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++c) {
      auto ui = u.component(i), uj = u.component(j);
      auto o = out.component(c);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t x = 0; x < size; ++x) o[x] = ui[x] * uj[x];
    }
  }
  return out;
}

SpectralField dealiased_spectral(const RealField& f) {
  auto out = spectral::to_spectral(f);
  spectral::dealias_in_place(out);
  return out;
}

}  // namespace

SpectralField def_rot_product(const SpectralField& u) {
  const int n = u.grid().dimension();
  const auto grad = spectral::to_real(spectral::gradient(u));
  return dealiased_spectral(def_rot_real(grad, n));
}

SpectralField reynolds_stress(const SpectralField& u, double alpha) {
  const int n = u.grid().dimension();
  if (alpha == 0.0) return SpectralField(u.grid(), n * n);
  auto tau = spectral::helmholtz_inverse(def_rot_product(u), alpha);
  tau *= alpha * alpha;
  return tau;
}

SpectralField reynolds_stress_divergence(const SpectralField& u, double alpha) {
  return spectral::divergence_rows(reynolds_stress(u, alpha));
}

SpectralField momentum_flux(const SpectralField& u) {
  const int n = u.grid().dimension();
  const auto upper = dealiased_spectral(outer_upper(spectral::to_real(u), n));
  SpectralField out(u.grid(), n * n);
  int c = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++c) {
      auto src = upper.component(c);
      std::copy(src.begin(), src.end(), out.component(i * n + j).begin());
      if (j != i) std::copy(src.begin(), src.end(), out.component(j * n + i).begin());
    }
  }
  return out;
}

SpectralField nonlinearity_V(const SpectralField& u, double alpha) {
  auto flux = momentum_flux(u);
  if (alpha != 0.0) flux += reynolds_stress(u, alpha);
  return spectral::divergence_rows(flux);
}

SpectralField projected_nonlinearity(const SpectralField& u, double alpha) {
  return spectral::stokes_project(nonlinearity_V(u, alpha), alpha);
}

}  // namespace lanslab::lans
