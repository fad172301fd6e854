#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <new>
#include <span>
#include <vector>

#include "lanslab/spectral/grid.hpp"

namespace lanslab::spectral {

/// Allocator returning SIMD-aligned storage suitable for FFTW plans.
template <class T>
struct AlignedAllocator {
  using value_type = T;
  AlignedAllocator() = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) {}  // NOLINT

  T* allocate(std::size_t n) {
    if (n > std::numeric_limits<std::size_t>::max() / sizeof(T)) throw std::bad_alloc();
    return static_cast<T*>(::operator new(n * sizeof(T), std::align_val_t{64}));
  }
  void deallocate(T* p, std::size_t) noexcept { ::operator delete(p, std::align_val_t{64}); }

  template <class U>
  bool operator==(const AlignedAllocator<U>&) const { return true; }
};

using Complex = std::complex<double>;
using RealArray = std::vector<double, AlignedAllocator<double>>;
using ComplexArray = std::vector<Complex, AlignedAllocator<Complex>>;

/// Real samples of a multi-component field on a Grid.
///
/// A vector field has grid.dimension() components; tensors use n*n components
/// in row-major (i, j) order; scalars have one.
class RealField {
 public:
  RealField(Grid grid, int components);

  static RealField vector(const Grid& grid) { return {grid, grid.dimension()}; }
  static RealField scalar(const Grid& grid) { return {grid, 1}; }
  /// Samples fn(x, component) at every grid point.
  static RealField sample(const Grid& grid, int components,
                          const std::function<double(const std::array<double, 3>&, int)>& fn);

  const Grid& grid() const { return grid_; }
  int components() const { return static_cast<int>(data_.size()); }
  std::span<double> component(int c) { return data_.at(c); }
  std::span<const double> component(int c) const { return data_.at(c); }

 private:
  Grid grid_;
  std::vector<RealArray> data_;
};

/// Fourier coefficients on the half-spectrum lattice, normalized so that the
/// constant field 1 has coefficient 1 at k = 0.
///
/// Only real fields are representable; the coefficient at -k is the conjugate
/// of the stored one, so conjugate symmetry holds by construction.
class SpectralField {
 public:
  SpectralField(Grid grid, int components);

  static SpectralField vector(const Grid& grid) { return {grid, grid.dimension()}; }
  static SpectralField scalar(const Grid& grid) { return {grid, 1}; }

  const Grid& grid() const { return grid_; }
  int components() const { return static_cast<int>(data_.size()); }
  std::span<Complex> component(int c) { return data_.at(c); }
  std::span<const Complex> component(int c) const { return data_.at(c); }

  /// Coefficient of e^{ik.x} in component c, for any k in the lattice.
  Complex coefficient(int c, const WaveVector& k) const;
  /// Sets the coefficient at k and its conjugate partner.
  void set_coefficient(int c, const WaveVector& k, Complex value);

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double factor);
  /// this += factor * other
  SpectralField& add_scaled(double factor, const SpectralField& other);

 private:
  Grid grid_;
  std::vector<ComplexArray> data_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double factor, SpectralField a);

/// Extracts a subset of components, e.g. one row of a tensor.
SpectralField select_components(const SpectralField& f, int first, int count);

/// Largest |entry| over all components.
double max_abs(const RealField& f);
double max_abs(const SpectralField& f);

/// L^2 norm via Parseval (normalized measure, Euclidean over components).
double l2_norm(const SpectralField& f);
/// Homogeneous H^1 seminorm ||grad f||_2 via Parseval.
double gradient_l2_norm(const SpectralField& f);

bool all_finite(const SpectralField& f);

}  // namespace lanslab::spectral
