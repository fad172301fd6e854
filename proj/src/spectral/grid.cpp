#include "lanslab/spectral/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace lanslab::spectral {
namespace {

bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

int signed_frequency(int i, int n) { return i <= n / 2 - 1 ? i : i - n; }

std::shared_ptr<const Lattice> build_lattice(int dim, int n) {
  auto lat = std::make_shared<Lattice>();
  const int half = n / 2 + 1;
  const std::size_t size =
      dim == 2 ? static_cast<std::size_t>(n) * half
               : static_cast<std::size_t>(n) * n * half;
  lat->k.resize(size);
  lat->k2.resize(size);
  lat->radius.resize(size);
  lat->parseval_weight.resize(size);
  lat->nyquist.resize(size);
  lat->dealias_mask.resize(size);

  std::size_t idx = 0;
  const int outer = dim == 2 ? 1 : n;
  for (int a = 0; a < outer; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < half; ++c, ++idx) {
        WaveVector k{};
        if (dim == 2) {
          k = {signed_frequency(b, n), c, 0};
        } else {
          k = {signed_frequency(a, n), signed_frequency(b, n), c};
        }
        const int last = dim == 2 ? k[1] : k[2];
        bool nyq = last == n / 2;
        for (int d = 0; d < dim; ++d) nyq = nyq || k[d] == -n / 2;
        const int k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
        lat->k[idx] = k;
        lat->k2[idx] = k2;
        lat->radius[idx] = std::sqrt(static_cast<double>(k2));
        lat->parseval_weight[idx] = (last == 0 || last == n / 2) ? 1.0 : 2.0;
        lat->nyquist[idx] = nyq ? 1 : 0;
        bool keep = !nyq;
        for (int d = 0; d < dim; ++d) keep = keep && std::abs(k[d]) <= n / 3;
        lat->dealias_mask[idx] = keep ? 1.0 : 0.0;
      }
    }
  }

  lat->distinct_k2 = lat->k2;
  std::sort(lat->distinct_k2.begin(), lat->distinct_k2.end());
  lat->distinct_k2.erase(std::unique(lat->distinct_k2.begin(), lat->distinct_k2.end()),
                         lat->distinct_k2.end());
  lat->k2_slot.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    lat->k2_slot[i] = static_cast<int>(
        std::lower_bound(lat->distinct_k2.begin(), lat->distinct_k2.end(), lat->k2[i]) -
        lat->distinct_k2.begin());
  }
  return lat;
}

std::shared_ptr<const Lattice> cached_lattice(int dim, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const Lattice>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{dim, n}];
  if (!slot) slot = build_lattice(dim, n);
  return slot;
}

}  // namespace

Grid::Grid(int dimension, int points_per_axis)
    : dimension_(dimension), points_(points_per_axis) {
  if (dimension != 2 && dimension != 3) {
    throw std::invalid_argument("grid dimension must be 2 or 3, got " +
                                std::to_string(dimension));
  }
  if (points_per_axis < 8 || !is_power_of_two(points_per_axis)) {
    throw std::invalid_argument("grid size must be a power of two >= 8, got " +
                                std::to_string(points_per_axis));
  }
  std::size_t real = 1;
  for (int d = 0; d < dimension; ++d) real *= static_cast<std::size_t>(points_);
  real_size_ = real;
  spectral_size_ = real / static_cast<std::size_t>(points_) * (points_ / 2 + 1);
  lattice_ = cached_lattice(dimension, points_);
}

int Grid::max_dyadic_index() const {
  int j = 0;
  while ((1 << (j + 2)) <= nyquist()) ++j;
  return j;
}

double Grid::coordinate(int i) const {
  return 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(points_);
}

std::ptrdiff_t Grid::spectral_index(const WaveVector& k) const {
  const int n = points_;
  const int half = n / 2 + 1;
  auto wrap = [n](int v) { return v < 0 ? v + n : v; };
  for (int d = 0; d < dimension_; ++d) {
    if (k[d] < -n / 2 || k[d] > n / 2) return -1;
  }
  const int last = k[dimension_ - 1];
  if (last < 0) return -1;
  if (dimension_ == 2) {
    if (k[0] == n / 2) return -1;
    return static_cast<std::ptrdiff_t>(wrap(k[0])) * half + last;
  }
  if (k[0] == n / 2 || k[1] == n / 2) return -1;
  return (static_cast<std::ptrdiff_t>(wrap(k[0])) * n + wrap(k[1])) * half + last;
}

std::array<double, 3> Grid::position(std::size_t flat) const {
  std::array<double, 3> x{};
  const auto n = static_cast<std::size_t>(points_);
  for (int d = dimension_ - 1; d >= 0; --d) {
    x[d] = coordinate(static_cast<int>(flat % n));
    flat /= n;
  }
  return x;
}

}  // namespace lanslab::spectral
