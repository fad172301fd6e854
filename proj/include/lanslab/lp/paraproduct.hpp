#pragma once

#include <vector>

#include "lanslab/lp/dyadic.hpp"

namespace lanslab::lp {

/// Physical-space dyadic pieces of a pair (f, g), shared by the Bony
/// paraproduct operations. Products pair components one-to-one.
class ProductWorkspace {
 public:
  ProductWorkspace(const DyadicFamily& family, const SpectralField& f, const SpectralField& g);

  const DyadicFamily& family() const { return *family_; }
  int max_index() const { return family_->max_index(); }

  /// Delta_b f / Delta_b g, b in [-1, J].
  const RealField& f_block(int b) const { return f_blocks_.at(static_cast<std::size_t>(b + 1)); }
  const RealField& g_block(int b) const { return g_blocks_.at(static_cast<std::size_t>(b + 1)); }
  /// S_b f / S_b g; zero fields for b < -1.
  const RealField& f_partial(int b) const;
  const RealField& g_partial(int b) const;

  /// Dealiased f g.
  SpectralField product() const;
  /// T_f g = sum_k (S_{k-2} f) Delta_k g
  SpectralField t_fg() const;
  /// T_g f = sum_k (S_{k-2} g) Delta_k f
  SpectralField t_gf() const;
  /// R(f, g) = sum_k (sum_{l=k-1}^{k+1} Delta_l f) Delta_k g
  SpectralField remainder() const;

 private:
  const DyadicFamily* family_;
  RealField f_;
  RealField g_;
  RealField zero_;
  std::vector<RealField> f_blocks_, g_blocks_, f_partials_, g_partials_;
};

SpectralField paraproduct_T(const DyadicFamily& family, const SpectralField& f, const SpectralField& g);
SpectralField remainder_R(const DyadicFamily& family, const SpectralField& f, const SpectralField& g);

/// Delta_j(f g) split into the three Bony pieces.
///
///   I   = sum_{k >= j-2} Delta_j((S_{k-2} f) Delta_k g)
///   II  = sum_{k >= j-2} Delta_j((S_{k-2} g) Delta_k f)
///   III = sum_{k >= j-3} Delta_j(Delta_k g sum_{l=k-1}^{k+1} Delta_l f)
///
/// With annuli 2^{k-1} < |xi| < 2^{k+1}, a term (S_{k-2} f) Delta_k g reaches
/// every frequency below 2.5 * 2^k, so I and II run over all k >= j-2 rather
/// than only |j - k| <= 2; the split is then exact: I + II + III = Delta_j(fg).
struct ProductBlockPieces {
  int j = 0;
  SpectralField target;  // Delta_j(f g)
  SpectralField first;   // I
  SpectralField second;  // II
  SpectralField third;   // III
};

ProductBlockPieces decompose_product_block(const ProductWorkspace& ws, int j);
ProductBlockPieces decompose_product_block(const DyadicFamily& family, const SpectralField& f,
                                           const SpectralField& g, int j);

}  // namespace lanslab::lp
