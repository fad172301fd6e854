#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lanslab/spectral/field.hpp"

namespace lanslab::spectral {

/// Real scalar Fourier multiplier tabulated on a grid's lattice.
///
/// Symbols are even in k (m(-k) = m(k)) so applying one to a real field keeps
/// it real.
class MultiplierSymbol {
 public:
  MultiplierSymbol(Grid grid, std::vector<double> values);

  /// m(k) = fn(|k|)
  static MultiplierSymbol radial(const Grid& grid, const std::function<double(double)>& fn);
  /// m(k) = fn(|k|^2), evaluated once per distinct |k|^2.
  static MultiplierSymbol of_k2(const Grid& grid, const std::function<double(int)>& fn);
  static MultiplierSymbol general(const Grid& grid, const std::function<double(const WaveVector&)>& fn);

  static MultiplierSymbol identity(const Grid& grid);
  /// -|k|^2
  static MultiplierSymbol laplacian(const Grid& grid);
  /// |k|^s, the symbol of Lambda^s = (-Delta)^{s/2}; zero at k = 0 for s > 0.
  static MultiplierSymbol lambda_power(const Grid& grid, double s);
  /// 1 / (1 + alpha^2 |k|^2)
  static MultiplierSymbol helmholtz_inverse(const Grid& grid, double alpha);
  /// 1 + alpha^2 |k|^2
  static MultiplierSymbol helmholtz(const Grid& grid, double alpha);
  /// exp(-nu t |k|^2)
  static MultiplierSymbol heat(const Grid& grid, double nu_t);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Coefficientwise product m(k) f_hat(k) on every component.
SpectralField apply_multiplier(const MultiplierSymbol& m, const SpectralField& f);
void apply_multiplier_in_place(const MultiplierSymbol& m, SpectralField& f);

/// d/dx_axis on every component; Nyquist coefficients map to zero.
SpectralField partial(const SpectralField& f, int axis);
/// Gradient of a vector field: component i*n + j holds d_j f_i.
SpectralField gradient(const SpectralField& f);
/// Divergence of a vector field (scalar result).
SpectralField divergence(const SpectralField& f);
/// Row divergence of an n x n tensor: (div tau)_i = sum_j d_j tau_ij.
SpectralField divergence_rows(const SpectralField& tensor);

/// Zeros every coefficient with some |k_i| > N/3 (2/3 rule) and the Nyquist planes.
void dealias_in_place(SpectralField& f);
SpectralField dealiased(SpectralField f);

/// Coefficientwise (Hadamard) product of two real fields, transformed and
/// truncated by the 2/3 rule. Components pair up one-to-one.
SpectralField dealiased_product(const RealField& a, const RealField& b);

}  // namespace lanslab::spectral
