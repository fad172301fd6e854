#include "lanslab/spectral/field.hpp"

#include <cmath>
#include <stdexcept>

#include "lanslab/spectral/kernels.hpp"

namespace lanslab::spectral {
namespace {

void require_compatible(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid()) || a.components() != b.components()) {
    throw std::invalid_argument("spectral fields live on different grids or shapes");
  }
}

}  // namespace

RealField::RealField(Grid grid, int components) : grid_(std::move(grid)) {
  if (components < 1) throw std::invalid_argument("field needs at least one component");
  data_.assign(static_cast<std::size_t>(components), RealArray(grid_.real_size(), 0.0));
}

RealField RealField::sample(const Grid& grid, int components,
                            const std::function<double(const std::array<double, 3>&, int)>& fn) {
  RealField f(grid, components);
  for (int c = 0; c < components; ++c) {
    auto data = f.component(c);
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = fn(grid.position(i), c);
  }
  return f;
}

SpectralField::SpectralField(Grid grid, int components) : grid_(std::move(grid)) {
  if (components < 1) throw std::invalid_argument("field needs at least one component");
  data_.assign(static_cast<std::size_t>(components), ComplexArray(grid_.spectral_size(), Complex{}));
}

Complex SpectralField::coefficient(int c, const WaveVector& k) const {
  const auto idx = grid_.spectral_index(k);
  if (idx >= 0) return data_.at(c)[static_cast<std::size_t>(idx)];
  const WaveVector neg{-k[0], -k[1], -k[2]};
  const auto nidx = grid_.spectral_index(neg);
  if (nidx < 0) throw std::out_of_range("wavevector outside the lattice");
  return std::conj(data_.at(c)[static_cast<std::size_t>(nidx)]);
}

void SpectralField::set_coefficient(int c, const WaveVector& k, Complex value) {
  auto idx = grid_.spectral_index(k);
  if (idx < 0) {
    idx = grid_.spectral_index({-k[0], -k[1], -k[2]});
    value = std::conj(value);
  }
  if (idx < 0) throw std::out_of_range("wavevector outside the lattice");
  data_.at(c)[static_cast<std::size_t>(idx)] = value;
  // On the self-conjugate plane the partner -k is stored too.
  const int last = k[grid_.dimension() - 1];
  if (last == 0) {
    const auto pidx = grid_.spectral_index({-k[0], -k[1], -k[2]});
    if (pidx >= 0) data_.at(c)[static_cast<std::size_t>(pidx)] = std::conj(value);
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& other) { return add_scaled(1.0, other); }

SpectralField& SpectralField::operator-=(const SpectralField& other) { return add_scaled(-1.0, other); }

SpectralField& SpectralField::operator*=(double factor) {
  for (auto& comp : data_) {
    for (auto& v : comp) v *= factor;
  }
  return *this;
}

SpectralField& SpectralField::add_scaled(double factor, const SpectralField& other) {
  require_compatible(*this, other);
  for (int c = 0; c < components(); ++c) kernels::parallel::axpy(factor, other.component(c), component(c));
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double factor, SpectralField a) { return a *= factor; }

SpectralField select_components(const SpectralField& f, int first, int count) {
  if (first < 0 || count < 1 || first + count > f.components()) {
    throw std::out_of_range("component selection out of range");
  }
  SpectralField out(f.grid(), count);
  for (int c = 0; c < count; ++c) {
    auto src = f.component(first + c);
    std::copy(src.begin(), src.end(), out.component(c).begin());
  }
  return out;
}

double max_abs(const RealField& f) {
  double m = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    for (double v : f.component(c)) m = std::max(m, std::abs(v));
  }
  return m;
}

double max_abs(const SpectralField& f) {
  double m = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    for (const auto& v : f.component(c)) m = std::max(m, std::abs(v));
  }
  return m;
}

double l2_norm(const SpectralField& f) {
  const auto& w = f.grid().lattice().parseval_weight;
  double s = 0.0;
  for (int c = 0; c < f.components(); ++c) s += kernels::parallel::weighted_sum_sq(f.component(c), w);
  return std::sqrt(s);
}

double gradient_l2_norm(const SpectralField& f) {
  const auto& lat = f.grid().lattice();
  std::vector<double> w(lat.k2.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = lat.nyquist[i] ? 0.0 : lat.parseval_weight[i] * lat.k2[i];
  }
  double s = 0.0;
  for (int c = 0; c < f.components(); ++c) s += kernels::parallel::weighted_sum_sq(f.component(c), w);
  return std::sqrt(s);
}

bool all_finite(const SpectralField& f) {
  for (int c = 0; c < f.components(); ++c) {
    for (const auto& v : f.component(c)) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  }
  return true;
}

}  // namespace lanslab::spectral
