#include "lanslab/lp/dyadic.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace lanslab::lp {
namespace {

double bump(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return std::exp(-1.0 / (t * (1.0 - t)));
}

// Composite 20-point Gauss-Legendre on [0, t].
double bump_integral(double t) {
  constexpr int kPanels = 16;
  double sum = 0.0;
  const double h = t / kPanels;
  for (int p = 0; p < kPanels; ++p) {
    sum += boost::math::quadrature::gauss<double, 20>::integrate(bump, p * h, (p + 1) * h);
  }
  return sum;
}

double bump_cdf(double t) {
  static const double total = 2.0 * bump_integral(0.5);
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  if (t > 0.5) return 1.0 - bump_cdf(1.0 - t);
  return bump_integral(t) / total;
}

}  // namespace

double smooth_cutoff(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  return 1.0 - bump_cdf(r - 1.0);
}

DyadicFamily::DyadicFamily(const Grid& grid, int max_index) : grid_(grid), max_index_(max_index) {
  if (max_index < 0 || std::ldexp(1.0, max_index + 1) > grid.nyquist()) {
    throw std::invalid_argument("dyadic index " + std::to_string(max_index) +
                                " too large for grid N=" + std::to_string(grid.points()));
  }
  symbols_.reserve(static_cast<std::size_t>(max_index) + 2);
  symbols_.push_back(spectral::MultiplierSymbol::radial(grid, [](double r) { return smooth_cutoff(2.0 * r); }));
  for (int j = 0; j <= max_index; ++j) {
    const double scale = std::ldexp(1.0, -j);
    symbols_.push_back(spectral::MultiplierSymbol::radial(grid, [scale](double r) {
      return smooth_cutoff(scale * r) - smooth_cutoff(2.0 * scale * r);
    }));
  }
  const auto& w = grid.lattice().parseval_weight;
  for (const auto& s : symbols_) {
    std::vector<double> pw(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) pw[i] = w[i] * s[i] * s[i];
    parseval_.push_back(std::move(pw));
  }
}

DyadicFamily::DyadicFamily(const Grid& grid) : DyadicFamily(grid, grid.max_dyadic_index()) {}

double DyadicFamily::resolved_radius() const { return std::ldexp(1.0, max_index_); }

const spectral::MultiplierSymbol& DyadicFamily::symbol(int b) const {
  if (b < -1 || b > max_index_) {
    throw std::out_of_range("dyadic block " + std::to_string(b) + " outside [-1, " +
                            std::to_string(max_index_) + "]");
  }
  return symbols_[static_cast<std::size_t>(b + 1)];
}

std::span<const double> DyadicFamily::parseval_weights(int b) const {
  (void)symbol(b);
  return parseval_[static_cast<std::size_t>(b + 1)];
}

std::span<const double> DyadicFamily::psi(int j) const {
  if (j < 0) throw std::out_of_range("psi index must be >= 0");
  return symbol(j).values();
}

std::vector<double> DyadicFamily::partition_sum() const {
  std::vector<double> sum(grid_.spectral_size(), 0.0);
  for (const auto& s : symbols_) {
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += s[i];
  }
  return sum;
}

SpectralField delta_j(const DyadicFamily& family, const SpectralField& f, int j) {
  return spectral::apply_multiplier(family.symbol(j), f);
}

SpectralField s_j(const DyadicFamily& family, const SpectralField& f, int j) {
  SpectralField out(f.grid(), f.components());
  if (j < -1) return out;
  const int top = std::min(j, family.max_index());
  std::vector<double> sym(f.grid().spectral_size(), 0.0);
  for (int b = -1; b <= top; ++b) {
    const auto& s = family.symbol(b);
    for (std::size_t i = 0; i < sym.size(); ++i) sym[i] += s[i];
  }
  return spectral::apply_multiplier(spectral::MultiplierSymbol(f.grid(), std::move(sym)), f);
}

SpectralField low_pass(const DyadicFamily& family, const SpectralField& f) { return delta_j(family, f, -1); }

SpectralField DyadicBlockDecomposition::reconstruct() const {
  SpectralField sum = low;
  for (const auto& b : blocks) sum += b;
  return sum;
}

DyadicBlockDecomposition decompose(const DyadicFamily& family, const SpectralField& f) {
  DyadicBlockDecomposition d{low_pass(family, f), {}};
  for (int j = 0; j <= family.max_index(); ++j) d.blocks.push_back(delta_j(family, f, j));
  return d;
}

}  // namespace lanslab::lp
