#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

namespace lanslab::spectral {

using WaveVector = std::array<int, 3>;

/// Integer frequency data for every coefficient of the half-spectrum layout.
///
/// The last axis stores only k >= 0 (real-to-complex convention), so each
/// entry with 0 < k_last < N/2 stands for itself and its conjugate partner.
struct Lattice {
  std::vector<WaveVector> k;
  std::vector<int> k2;
  std::vector<double> radius;
  /// 1 on the self-conjugate planes k_last = 0 and k_last = N/2, 2 elsewhere.
  std::vector<double> parseval_weight;
  /// True when any component sits on the Nyquist frequency -N/2.
  std::vector<unsigned char> nyquist;
  /// 1 where the 2/3 rule keeps the coefficient (all |k_i| <= N/3, no Nyquist), else 0.
  std::vector<double> dealias_mask;
  /// Sorted distinct values of |k|^2 and the position of each entry in that list.
  std::vector<int> distinct_k2;
  std::vector<int> k2_slot;
};

/// Uniform periodic grid on the torus [0, 2pi)^n with normalized measure.
///
/// Sample i along an axis sits at x = 2 pi i / N. Real arrays are row-major
/// with axis 0 slowest; spectral arrays use the same order with the last axis
/// truncated to N/2 + 1 entries.
class Grid {
 public:
  Grid(int dimension, int points_per_axis);

  int dimension() const { return dimension_; }
  int points() const { return points_; }
  int nyquist() const { return points_ / 2; }
  std::size_t real_size() const { return real_size_; }
  std::size_t spectral_size() const { return spectral_size_; }
  /// Largest J with 2^(J+1) <= N/2.
  int max_dyadic_index() const;
  /// Largest retained |k_i| under the 2/3 rule.
  int dealias_cutoff() const { return points_ / 3; }

  double coordinate(int i) const;
  const Lattice& lattice() const { return *lattice_; }

  /// Flat spectral index of wavevector k, or -1 when k is not stored directly
  /// (negative last component, or out of range).
  std::ptrdiff_t spectral_index(const WaveVector& k) const;
  /// Position vector of real sample `flat`.
  std::array<double, 3> position(std::size_t flat) const;

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.dimension_ == b.dimension_ && a.points_ == b.points_;
  }

 private:
  int dimension_;
  int points_;
  std::size_t real_size_;
  std::size_t spectral_size_;
  std::shared_ptr<const Lattice> lattice_;
};

}  // namespace lanslab::spectral
