#pragma once

#include <span>
#include <vector>

#include "lanslab/spectral/field.hpp"
#include "lanslab/spectral/multiplier.hpp"

namespace lanslab::lp {

using spectral::Grid;
using spectral::RealField;
using spectral::SpectralField;

/// Smooth radial cutoff: 1 on r <= 1, 0 on r >= 2, monotone in between.
///
/// The transition is 1 - F(r - 1) with F the normalized running integral of
/// the bump exp(-1 / (t (1 - t))) on [0, 1]. F(1 - t) = 1 - F(t) holds exactly.
double smooth_cutoff(double r);

/// Littlewood-Paley multipliers on a grid.
///
///   psi_hat_0(xi) = chi(|xi|) - chi(2|xi|)     supported in 1/2 < |xi| < 2
///   psi_hat_j(xi) = psi_hat_0(2^-j xi)          supported in A_j
///   Psi_hat(xi)   = chi(2|xi|)                  (only k = 0 on the lattice)
///
/// Block index -1 denotes the low-frequency piece Psi throughout this module,
/// so S_j = sum_{b=-1}^{j} Delta_b. Psi_hat + sum_{j<=J} psi_hat_j telescopes
/// to chi(2^-J |xi|), which is 1 for |xi| <= 2^J.
class DyadicFamily {
 public:
  /// Throws std::invalid_argument unless 0 <= max_index and 2^(max_index+1) <= N/2.
  DyadicFamily(const Grid& grid, int max_index);
  /// Uses the largest admissible index for the grid.
  explicit DyadicFamily(const Grid& grid);

  const Grid& grid() const { return grid_; }
  int max_index() const { return max_index_; }
  /// |k| up to which the blocks sum to one.
  double resolved_radius() const;

  /// Multiplier table for block b in [-1, max_index].
  const spectral::MultiplierSymbol& symbol(int b) const;
  std::span<const double> psi(int j) const;
  std::span<const double> low() const { return symbol(-1).values(); }
  /// parseval_weight(k) * symbol(b)(k)^2, so that ||Delta_b f||_2^2 is a
  /// weighted sum of |f_hat|^2.
  std::span<const double> parseval_weights(int b) const;

  /// Psi_hat(k) + sum_j psi_hat_j(k) at every lattice point.
  std::vector<double> partition_sum() const;

 private:
  Grid grid_;
  int max_index_;
  std::vector<spectral::MultiplierSymbol> symbols_;  // index b + 1
  std::vector<std::vector<double>> parseval_;
};

/// Delta_j f for j in [0, J]; j = -1 gives the Psi piece. Other j throw.
SpectralField delta_j(const DyadicFamily& family, const SpectralField& f, int j);
/// S_j f = Psi*f + sum_{0<=k<=j} Delta_k f. Zero for j < -1; j > J is clamped.
SpectralField s_j(const DyadicFamily& family, const SpectralField& f, int j);
/// Psi * f
SpectralField low_pass(const DyadicFamily& family, const SpectralField& f);

/// All pieces Delta_b f for b = -1..J, in order.
struct DyadicBlockDecomposition {
  SpectralField low;
  std::vector<SpectralField> blocks;  // blocks[j] = Delta_j f

  SpectralField reconstruct() const;
};

DyadicBlockDecomposition decompose(const DyadicFamily& family, const SpectralField& f);

}  // namespace lanslab::lp
