#include "lanslab/spectral/multiplier.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "lanslab/spectral/fft.hpp"
#include "lanslab/spectral/kernels.hpp"

namespace lanslab::spectral {

MultiplierSymbol::MultiplierSymbol(Grid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.spectral_size()) {
    throw std::invalid_argument("multiplier table does not match the grid lattice");
  }
}

MultiplierSymbol MultiplierSymbol::radial(const Grid& grid, const std::function<double(double)>& fn) {
  return of_k2(grid, [&fn](int k2) { return fn(std::sqrt(static_cast<double>(k2))); });
}

MultiplierSymbol MultiplierSymbol::of_k2(const Grid& grid, const std::function<double(int)>& fn) {
  const auto& lat = grid.lattice();
  std::vector<double> per_k2(lat.distinct_k2.size());
  for (std::size_t i = 0; i < per_k2.size(); ++i) per_k2[i] = fn(lat.distinct_k2[i]);
  std::vector<double> values(grid.spectral_size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = per_k2[lat.k2_slot[i]];
  return {grid, std::move(values)};
}

MultiplierSymbol MultiplierSymbol::general(const Grid& grid,
                                           const std::function<double(const WaveVector&)>& fn) {
  const auto& lat = grid.lattice();
  std::vector<double> values(grid.spectral_size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = fn(lat.k[i]);
  return {grid, std::move(values)};
}

MultiplierSymbol MultiplierSymbol::identity(const Grid& grid) {
  return {grid, std::vector<double>(grid.spectral_size(), 1.0)};
}

MultiplierSymbol MultiplierSymbol::laplacian(const Grid& grid) {
  return of_k2(grid, [](int k2) { return -static_cast<double>(k2); });
}

MultiplierSymbol MultiplierSymbol::lambda_power(const Grid& grid, double s) {
  return of_k2(grid, [s](int k2) {
    if (k2 == 0) return s == 0.0 ? 1.0 : 0.0;
    return std::pow(static_cast<double>(k2), 0.5 * s);
  });
}

MultiplierSymbol MultiplierSymbol::helmholtz_inverse(const Grid& grid, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("alpha must be non-negative");
  const double a2 = alpha * alpha;
  return of_k2(grid, [a2](int k2) { return 1.0 / (1.0 + a2 * k2); });
}

MultiplierSymbol MultiplierSymbol::helmholtz(const Grid& grid, double alpha) {
  const double a2 = alpha * alpha;
  return of_k2(grid, [a2](int k2) { return 1.0 + a2 * k2; });
}

MultiplierSymbol MultiplierSymbol::heat(const Grid& grid, double nu_t) {
  return of_k2(grid, [nu_t](int k2) { return std::exp(-nu_t * k2); });
}

SpectralField apply_multiplier(const MultiplierSymbol& m, const SpectralField& f) {
  SpectralField out = f;
  apply_multiplier_in_place(m, out);
  return out;
}

void apply_multiplier_in_place(const MultiplierSymbol& m, SpectralField& f) {
  if (!(m.grid() == f.grid())) throw std::invalid_argument("multiplier and field grids differ");
  for (int c = 0; c < f.components(); ++c) kernels::parallel::scale(f.component(c), m.values());
}

SpectralField partial(const SpectralField& f, int axis) {
  const Grid& grid = f.grid();
  if (axis < 0 || axis >= grid.dimension()) throw std::out_of_range("derivative axis");
  const auto& lat = grid.lattice();
  SpectralField out(grid, f.components());
  for (int c = 0; c < f.components(); ++c) {
    auto src = f.component(c);
    auto dst = out.component(c);
    const auto n = static_cast<std::ptrdiff_t>(src.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const double k = lat.nyquist[i] ? 0.0 : static_cast<double>(lat.k[i][axis]);
      dst[i] = Complex(-k * src[i].imag(), k * src[i].real());
    }
  }
  return out;
}

SpectralField gradient(const SpectralField& f) {
  const Grid& grid = f.grid();
  const int n = grid.dimension();
  if (f.components() != n) throw std::invalid_argument("gradient expects a vector field");
  const auto& lat = grid.lattice();
  const auto size = static_cast<std::ptrdiff_t>(grid.spectral_size());
  SpectralField out(grid, n * n);
  for (int i = 0; i < n; ++i) {
    auto src = f.component(i);
    for (int j = 0; j < n; ++j) {
      auto dst = out.component(i * n + j);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t x = 0; x < size; ++x) {
        const double k = lat.nyquist[x] ? 0.0 : static_cast<double>(lat.k[x][j]);
        dst[x] = Complex(-k * src[x].imag(), k * src[x].real());
      }
    }
  }
  return out;
}

SpectralField divergence(const SpectralField& f) {
  const int n = f.grid().dimension();
  if (f.components() != n) throw std::invalid_argument("divergence expects a vector field");
  SpectralField out = SpectralField::scalar(f.grid());
  for (int j = 0; j < n; ++j) {
    SpectralField dj = partial(select_components(f, j, 1), j);
    out += dj;
  }
  return out;
}

SpectralField divergence_rows(const SpectralField& tensor) {
  const Grid& grid = tensor.grid();
  const int n = grid.dimension();
  if (tensor.components() != n * n) throw std::invalid_argument("row divergence expects an n x n tensor");
  const auto& lat = grid.lattice();
  const auto size = static_cast<std::ptrdiff_t>(grid.spectral_size());
  SpectralField out = SpectralField::vector(grid);
  for (int i = 0; i < n; ++i) {
    auto dst = out.component(i);
    for (int j = 0; j < n; ++j) {
      auto src = tensor.component(i * n + j);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t x = 0; x < size; ++x) {
        const double k = lat.nyquist[x] ? 0.0 : static_cast<double>(lat.k[x][j]);
        dst[x] += Complex(-k * src[x].imag(), k * src[x].real());
      }
    }
  }
  return out;
}

void dealias_in_place(SpectralField& f) {
  const auto& mask = f.grid().lattice().dealias_mask;
  for (int c = 0; c < f.components(); ++c) kernels::parallel::scale(f.component(c), mask);
}

SpectralField dealiased(SpectralField f) {
  dealias_in_place(f);
  return f;
}

SpectralField dealiased_product(const RealField& a, const RealField& b) {
  if (!(a.grid() == b.grid()) || a.components() != b.components()) {
    throw std::invalid_argument("product operands differ in grid or shape");
  }
  RealField prod(a.grid(), a.components());
  for (int c = 0; c < a.components(); ++c) {
    kernels::parallel::multiply(a.component(c), b.component(c), prod.component(c));
  }
  SpectralField out = to_spectral(prod);
  dealias_in_place(out);
  return out;
}

}  // namespace lanslab::spectral
