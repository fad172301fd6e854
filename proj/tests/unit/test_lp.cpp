#include <doctest.h>

#include <cmath>

#include "lanslab/lp/dyadic.hpp"
#include "lanslab/lp/norms.hpp"
#include "lanslab/lp/paraproduct.hpp"
#include "lanslab/spectral/fft.hpp"
#include "lanslab/spectral/random_fields.hpp"

using namespace lanslab;
using lp::DyadicFamily;
using spectral::Grid;
using spectral::SpectralField;

namespace {

SpectralField random_scalar(std::uint64_t seed, const Grid& grid, double radius) {
  spectral::RandomFieldOptions opts;
  opts.shell = {0.0, radius};
  opts.mean = 1.0;
  return spectral::random_field(seed, grid, opts);
}

// psi_hat_j(r) written out from the cutoff: chi(r / 2^j) - chi(r / 2^(j-1)).
double psi_hat(int j, double r) {
  return lp::smooth_cutoff(r / std::ldexp(1.0, j)) - lp::smooth_cutoff(r / std::ldexp(1.0, j - 1));
}

}  // namespace

TEST_CASE("cutoff is 1 inside, 0 outside, monotone and antisymmetric about 3/2") {
  CHECK(lp::smooth_cutoff(0.0) == 1.0);
  CHECK(lp::smooth_cutoff(1.0) == 1.0);
  CHECK(lp::smooth_cutoff(2.0) == 0.0);
  CHECK(lp::smooth_cutoff(7.0) == 0.0);
  double prev = 1.0;
  for (int i = 1; i < 200; ++i) {
    const double r = 1.0 + i / 200.0;
    const double v = lp::smooth_cutoff(r);
    CHECK(v <= prev);
    CHECK(v >= 0.0);
    if (r >= 1.2 && r <= 1.8) {
      CHECK(v > 0.0);
      CHECK(v < 1.0);
    }
    prev = v;
    const double d = r - 1.5;
    CHECK(lp::smooth_cutoff(1.5 + d) + lp::smooth_cutoff(1.5 - d) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("largest dyadic index follows 2^(J+1) <= N/2") {
  CHECK(Grid(3, 16).max_dyadic_index() == 2);
  CHECK(Grid(3, 32).max_dyadic_index() == 3);
  CHECK(Grid(2, 64).max_dyadic_index() == 4);
  CHECK_THROWS_AS(DyadicFamily(Grid(2, 16), 3), std::invalid_argument);
}

TEST_CASE("blocks partition unity and sit in their annuli") {
  for (int n : {2, 3}) {
    const Grid grid(n, 32);
    const DyadicFamily family(grid);
    const auto sum = family.partition_sum();
    const auto& lat = grid.lattice();
    for (std::size_t i = 0; i < lat.k.size(); ++i) {
      const double r = lat.radius[i];
      if (r <= family.resolved_radius()) CHECK(sum[i] == doctest::Approx(1.0).epsilon(1e-14));
      for (int j = 0; j <= family.max_index(); ++j) {
        const double v = family.psi(j)[i];
        CHECK(v == doctest::Approx(psi_hat(j, r)).epsilon(1e-14));
        if (r <= std::ldexp(1.0, j - 1) || r >= std::ldexp(1.0, j + 1)) CHECK(v == 0.0);
      }
      CHECK(family.low()[i] == (lat.k2[i] == 0 ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("block decomposition reconstructs resolved fields") {
  const Grid grid(3, 32);
  const DyadicFamily family(grid);
  const auto f = random_scalar(3, grid, family.resolved_radius());
  const auto parts = lp::decompose(family, f);
  CHECK(spectral::l2_norm(parts.reconstruct() - f) < 1e-14 * spectral::l2_norm(f));
  CHECK(lp::unresolved_fraction(family, f) < 1e-14);
  CHECK(spectral::l2_norm(lp::s_j(family, f, family.max_index()) - f) < 1e-14 * spectral::l2_norm(f));
  CHECK(spectral::l2_norm(lp::s_j(family, f, -2)) == 0.0);
}

TEST_CASE("Besov norm of a single Fourier mode from the multiplier values") {
  const Grid grid(3, 32);
  const DyadicFamily family(grid);
  auto f = SpectralField::scalar(grid);
  f.set_coefficient(0, {3, 1, 0}, {0.5, 0.0});  // cos(3x + y)
  const double r = std::sqrt(10.0);
  const double l2 = 1.0 / std::sqrt(2.0);
  for (double s : {-1.0, 0.0, 1.5}) {
    for (double q : {1.0, 2.0, lp::kInfinity}) {
      double acc = 0.0;
      for (int j = 0; j <= family.max_index(); ++j) {
        const double w = std::pow(2.0, j * s) * std::abs(psi_hat(j, r)) * l2;
        acc = std::isinf(q) ? std::max(acc, w) : acc + std::pow(w, q);
      }
      const double expected = std::isinf(q) ? acc : std::pow(acc, 1.0 / q);
      CHECK(lp::besov_norm(family, f, {s, 2.0, q}) == doctest::Approx(expected).epsilon(1e-13));
      CHECK(lp::besov_tilde_norm(family, f, {s, 2.0, q}) == doctest::Approx(expected).epsilon(1e-13));
    }
  }
}

TEST_CASE("Parseval block norms agree with physical-space block norms") {
  const Grid grid(2, 32);
  const DyadicFamily family(grid);
  const auto f = random_scalar(9, grid, 14.0);
  const auto fast = lp::block_norms(family, f, 2.0);
  for (int b = -1; b <= family.max_index(); ++b) {
    const double slow = lp::lp_norm(spectral::to_real(lp::delta_j(family, f, b)), 2.0);
    CHECK(fast[static_cast<std::size_t>(b + 1)] == doctest::Approx(slow).epsilon(1e-12));
  }
}

TEST_CASE("Besov norms are homogeneous and monotone in s and q") {
  const Grid grid(3, 16);
  const DyadicFamily family(grid);
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto f = random_scalar(seed, grid, 7.0);
    for (double p : {1.0, 2.0, 4.0, lp::kInfinity}) {
      const double base = lp::besov_norm(family, f, {1.0, p, 2.0});
      CHECK(lp::besov_norm(family, -3.0 * f, {1.0, p, 2.0}) == doctest::Approx(3.0 * base).epsilon(1e-12));
      CHECK(lp::besov_norm(family, f, {0.5, p, 2.0}) <= base);
      CHECK(lp::besov_norm(family, f, {1.0, p, 1.0}) >= base);
      CHECK(lp::besov_norm(family, f, {1.0, p, lp::kInfinity}) <= base);
    }
  }
}

TEST_CASE("Besov index rejects exponents below one") {
  CHECK_THROWS_AS((lp::BesovIndex{0.0, 0.5, 2.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((lp::BesovIndex{0.0, 2.0, 0.9}.validate()), std::invalid_argument);
  CHECK_NOTHROW((lp::BesovIndex{0.0, lp::kInfinity, lp::kInfinity}.validate()));
}

TEST_CASE("Bernstein ratio is one for a mode on the dyadic sphere") {
  const Grid grid(3, 32);
  auto f = SpectralField::scalar(grid);
  f.set_coefficient(0, {4, 0, 0}, {0.0, 0.5});
  CHECK(lp::bernstein_ratio(f, 2, 1.0, 2.0, 2.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(lp::bernstein_ratio(f, 2, 2.5, 2.0, 2.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("H^1 norm of a single mode") {
  const Grid grid(2, 16);
  auto f = SpectralField::scalar(grid);
  f.set_coefficient(0, {1, 2, 0}, {0.5, 0.0});
  CHECK(lp::h1_norm(f) == doctest::Approx(std::sqrt(6.0) / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("paraproducts and remainder rebuild the dealiased product") {
  for (int n : {2, 3}) {
    const Grid grid(n, n == 2 ? 64 : 32);
    const DyadicFamily family(grid);
    const auto f = random_scalar(21, grid, family.resolved_radius());
    const auto g = random_scalar(22, grid, family.resolved_radius());
    const lp::ProductWorkspace ws(family, f, g);
    const auto fg = ws.product();
    const auto sum = ws.t_fg() + ws.t_gf() + ws.remainder();
    CHECK(spectral::l2_norm(sum - fg) < 1e-12 * spectral::l2_norm(fg));
    CHECK(spectral::l2_norm(lp::paraproduct_T(family, f, g) - ws.t_fg()) == 0.0);
  }
}

TEST_CASE("the three product pieces add up to each block of the product") {
  const Grid grid(3, 32);
  const DyadicFamily family(grid);
  const auto f = random_scalar(31, grid, family.resolved_radius());
  const auto g = random_scalar(32, grid, family.resolved_radius());
  const lp::ProductWorkspace ws(family, f, g);
  for (int j = -1; j <= family.max_index(); ++j) {
    const auto pieces = lp::decompose_product_block(ws, j);
    const auto sum = pieces.first + pieces.second + pieces.third;
    CHECK(spectral::l2_norm(sum - pieces.target) <= 1e-12 * spectral::l2_norm(pieces.target));
  }
  CHECK_THROWS_AS(lp::decompose_product_block(ws, family.max_index() + 1), std::out_of_range);
}

TEST_CASE("low-high products stay near the high block") {
  const Grid grid(2, 64);
  const DyadicFamily family(grid);
  const auto f = random_scalar(41, grid, 30.0);
  const auto g = random_scalar(42, grid, 30.0);
  const int m = 4;
  const auto low = spectral::to_real(lp::s_j(family, f, m - 3));
  const auto high = spectral::to_real(lp::delta_j(family, g, m));
  const auto prod = spectral::dealiased_product(low, high);
  for (int j = -1; j <= family.max_index(); ++j) {
    if (std::abs(j - m) >= 3) CHECK(spectral::l2_norm(lp::delta_j(family, prod, j)) < 1e-14);
  }
}
