#include "lanslab/lp/paraproduct.hpp"

#include <algorithm>
#include <stdexcept>

#include "lanslab/spectral/fft.hpp"
#include "lanslab/spectral/kernels.hpp"
#include "lanslab/spectral/multiplier.hpp"

namespace lanslab::lp {
namespace {

void accumulate_product(const RealField& a, const RealField& b, RealField& out) {
  for (int c = 0; c < out.components(); ++c) {
    kernels::parallel::multiply_add(a.component(c), b.component(c), out.component(c));
  }
}

SpectralField finish(const RealField& acc) {
  auto out = spectral::to_spectral(acc);
  spectral::dealias_in_place(out);
  return out;
}

}  // namespace

ProductWorkspace::ProductWorkspace(const DyadicFamily& family, const SpectralField& f, const SpectralField& g)
    : family_(&family),
      f_(spectral::to_real(f)),
      g_(spectral::to_real(g)),
      zero_(f.grid(), f.components()) {
  if (!(f.grid() == g.grid()) || f.components() != g.components()) {
    throw std::invalid_argument("paraproduct operands differ in grid or shape");
  }
  if (!(family.grid() == f.grid())) throw std::invalid_argument("dyadic family built for another grid");
  for (int b = -1; b <= family.max_index(); ++b) {
    f_blocks_.push_back(spectral::to_real(delta_j(family, f, b)));
    g_blocks_.push_back(spectral::to_real(delta_j(family, g, b)));
    f_partials_.push_back(spectral::to_real(s_j(family, f, b)));
    g_partials_.push_back(spectral::to_real(s_j(family, g, b)));
  }
}

const RealField& ProductWorkspace::f_partial(int b) const {
  if (b < -1) return zero_;
  return f_partials_.at(static_cast<std::size_t>(std::min(b, max_index()) + 1));
}

const RealField& ProductWorkspace::g_partial(int b) const {
  if (b < -1) return zero_;
  return g_partials_.at(static_cast<std::size_t>(std::min(b, max_index()) + 1));
}

SpectralField ProductWorkspace::product() const { return spectral::dealiased_product(f_, g_); }

SpectralField ProductWorkspace::t_fg() const {
  RealField acc(zero_.grid(), zero_.components());
  for (int k = 1; k <= max_index(); ++k) accumulate_product(f_partial(k - 2), g_block(k), acc);
  return finish(acc);
}

SpectralField ProductWorkspace::t_gf() const {
  RealField acc(zero_.grid(), zero_.components());
  for (int k = 1; k <= max_index(); ++k) accumulate_product(g_partial(k - 2), f_block(k), acc);
  return finish(acc);
}

SpectralField ProductWorkspace::remainder() const {
  RealField acc(zero_.grid(), zero_.components());
  for (int k = -1; k <= max_index(); ++k) {
    for (int l = std::max(-1, k - 1); l <= std::min(max_index(), k + 1); ++l) {
      accumulate_product(f_block(l), g_block(k), acc);
    }
  }
  return finish(acc);
}

SpectralField paraproduct_T(const DyadicFamily& family, const SpectralField& f, const SpectralField& g) {
  return ProductWorkspace(family, f, g).t_fg();
}

SpectralField remainder_R(const DyadicFamily& family, const SpectralField& f, const SpectralField& g) {
  return ProductWorkspace(family, f, g).remainder();
}

ProductBlockPieces decompose_product_block(const ProductWorkspace& ws, int j) {
  const int top = ws.max_index();
  if (j < -1 || j > top) throw std::out_of_range("product block index outside the family");
  const auto& family = ws.family();
  const Grid& grid = ws.f_block(-1).grid();
  const int comps = ws.f_block(-1).components();

  RealField first(grid, comps), second(grid, comps), third(grid, comps);
  for (int k = std::max(-1, j - 2); k <= top; ++k) {
    accumulate_product(ws.f_partial(k - 2), ws.g_block(k), first);
    accumulate_product(ws.g_partial(k - 2), ws.f_block(k), second);
  }
  for (int k = std::max(-1, j - 3); k <= top; ++k) {
    for (int l = std::max(-1, k - 1); l <= std::min(top, k + 1); ++l) {
      accumulate_product(ws.g_block(k), ws.f_block(l), third);
    }
  }
  return {j, delta_j(family, ws.product(), j), delta_j(family, finish(first), j),
          delta_j(family, finish(second), j), delta_j(family, finish(third), j)};
}

ProductBlockPieces decompose_product_block(const DyadicFamily& family, const SpectralField& f,
                                           const SpectralField& g, int j) {
  return decompose_product_block(ProductWorkspace(family, f, g), j);
}

}  // namespace lanslab::lp
