#include "lanslab/lans/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/legendre.hpp>

#include "lanslab/spectral/multiplier.hpp"

namespace lanslab::lans {
namespace {

using spectral::Complex;

struct GaussRule {
  std::vector<double> x;  // on [-1, 1]
  std::vector<double> w;
};

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("quadrature needs at least one node");
  GaussRule rule;
  for (double z : boost::math::legendre_p_zeros<double>(n)) {
    const double dp = boost::math::legendre_p_prime(n, z);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.x.push_back(z);
    rule.w.push_back(w);
    if (z != 0.0) {
      rule.x.push_back(-z);
      rule.w.push_back(w);
    }
  }
  return rule;
}

double lagrange_basis(const std::vector<double>& nodes, std::size_t m, double s) {
  double v = 1.0;
  for (std::size_t l = 0; l < nodes.size(); ++l) {
    if (l != m) v *= (s - nodes[l]) / (nodes[m] - nodes[l]);
  }
  return v;
}

// First index of the interpolation stencil used on interval [t_i, t_{i+1}].
std::size_t stencil_start(std::size_t i, std::size_t width, std::size_t total) {
  const std::ptrdiff_t start = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(width / 2 - 1);
  const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(total - width);
  return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(start, 0, hi));
}

// out += int_a^b e^{-nu |k|^2 (b - s)} p(s) ds, p the Lagrange interpolant of
// g through the stencil samples.
void add_interval(const Trajectory& g, std::size_t first, std::size_t width, double a, double b, double nu,
                  const GaussRule& rule, SpectralField& out) {
  const auto& lat = out.grid().lattice();
  const auto& k2 = lat.distinct_k2;
  std::vector<double> nodes(width);
  for (std::size_t m = 0; m < width; ++m) nodes[m] = g[first + m].t;

  const double half = 0.5 * (b - a);
  std::vector<std::vector<double>> weights(width, std::vector<double>(k2.size(), 0.0));
  for (std::size_t q = 0; q < rule.x.size(); ++q) {
    const double s = a + half * (rule.x[q] + 1.0);
    for (std::size_t m = 0; m < width; ++m) {
      const double base = half * rule.w[q] * lagrange_basis(nodes, m, s);
      for (std::size_t slot = 0; slot < k2.size(); ++slot) {
        weights[m][slot] += base * std::exp(-nu * k2[slot] * (b - s));
      }
    }
  }

  const auto size = static_cast<std::ptrdiff_t>(out.grid().spectral_size());
  for (std::size_t m = 0; m < width; ++m) {
    const auto& sample = g[first + m].u;
    const auto& w = weights[m];
    for (int c = 0; c < out.components(); ++c) {
      auto src = sample.component(c);
      auto dst = out.component(c);
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t i = 0; i < size; ++i) dst[i] += w[lat.k2_slot[i]] * src[i];
    }
  }
}

void check_forcing(const Trajectory& g) {
  if (g.empty()) throw std::invalid_argument("Duhamel integral of an empty trajectory");
  if (g.front().t != 0.0) throw std::invalid_argument("Duhamel forcing must start at t = 0");
}

}  // namespace

SpectralField semigroup_apply(const SpectralField& phi, double t, double nu) {
  if (!(t >= 0.0)) throw std::invalid_argument("semigroup time must be >= 0");
  if (t == 0.0) return phi;
  return spectral::apply_multiplier(spectral::MultiplierSymbol::heat(phi.grid(), nu * t), phi);
}

SpectralField duhamel_apply(const Trajectory& g, double t, double nu, int quadrature_nodes) {
  check_forcing(g);
  if (!(t >= 0.0)) throw std::invalid_argument("Duhamel time must be >= 0");
  if (t > g.back().t) throw std::out_of_range("Duhamel time beyond the forcing samples");
  const auto rule = gauss_legendre(quadrature_nodes);
  const std::size_t total = g.size();
  const std::size_t width = std::min<std::size_t>(4, total);
  SpectralField out(g.grid(), g.front().u.components());
  if (t == 0.0) return out;
  if (total == 1) throw std::out_of_range("Duhamel time beyond the forcing samples");

  // Integrate each interval up to t, then propagate the partial result to t.
  for (std::size_t i = 0; i + 1 < total && g[i].t < t; ++i) {
    const double b = std::min(t, g[i + 1].t);
    SpectralField piece(out.grid(), out.components());
    add_interval(g, stencil_start(i, width, total), width, g[i].t, b, nu, rule, piece);
    out += semigroup_apply(piece, t - b, nu);
  }
  return out;
}

std::vector<SpectralField> duhamel_series(const Trajectory& g, double nu, int quadrature_nodes) {
  check_forcing(g);
  const auto rule = gauss_legendre(quadrature_nodes);
  const std::size_t total = g.size();
  const std::size_t width = std::min<std::size_t>(4, total);
  std::vector<SpectralField> out;
  out.reserve(total);
  out.emplace_back(g.grid(), g.front().u.components());
  for (std::size_t i = 0; i + 1 < total; ++i) {
    SpectralField next = semigroup_apply(out.back(), g[i + 1].t - g[i].t, nu);
    add_interval(g, stencil_start(i, width, total), width, g[i].t, g[i + 1].t, nu, rule, next);
    out.push_back(std::move(next));
  }
  return out;
}

}  // namespace lanslab::lans
