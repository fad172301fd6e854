#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <complex>
#include <filesystem>
#include <numbers>
#include <random>

#include "lanslab/lp/norms.hpp"
#include "lanslab/spectral/fft.hpp"
#include "lanslab/spectral/kernels.hpp"
#include "lanslab/spectral/multiplier.hpp"
#include "lanslab/spectral/projection.hpp"
#include "lanslab/spectral/random_fields.hpp"
#include "lanslab/spectral/snapshot.hpp"

using namespace lanslab;
using spectral::Complex;
using spectral::Grid;
using spectral::RealField;
using spectral::SpectralField;

namespace {

RealField sampled(const Grid& grid, int comps, double (*fn)(const std::array<double, 3>&, int)) {
  return RealField::sample(grid, comps, fn);
}

double max_diff(const RealField& a, const RealField& b) {
  double m = 0.0;
  for (int c = 0; c < a.components(); ++c) {
    for (std::size_t i = 0; i < a.component(c).size(); ++i) {
      m = std::max(m, std::abs(a.component(c)[i] - b.component(c)[i]));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("forward transform matches a direct DFT on a small 2D grid") {
  const Grid grid(2, 8);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  RealField f = RealField::scalar(grid);
  for (double& x : f.component(0)) x = u(rng);
  const auto fh = spectral::to_spectral(f);
  for (int k0 = -3; k0 <= 3; ++k0) {
    for (int k1 = -3; k1 <= 3; ++k1) {
      Complex direct = 0;
      for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
          const double phase = -(k0 * grid.coordinate(i) + k1 * grid.coordinate(j));
          direct += f.component(0)[i * 8 + j] * std::polar(1.0, phase);
        }
      }
      direct /= 64.0;
      CHECK(std::abs(fh.coefficient(0, {k0, k1, 0}) - direct) < 1e-14);
    }
  }
}

TEST_CASE("round trip through the spectral representation is the identity") {
  const Grid grid(3, 16);
  const auto f = sampled(grid, 3, [](const std::array<double, 3>& x, int c) {
    return std::sin(x[0] + c) * std::cos(2 * x[1]) + 0.3 * std::cos(3 * x[2] - x[0]);
  });
  CHECK(max_diff(spectral::to_real(spectral::to_spectral(f)), f) < 1e-13);
}

TEST_CASE("constant field has coefficient one at k = 0") {
  const Grid grid(3, 8);
  const auto one = sampled(grid, 1, [](const std::array<double, 3>&, int) { return 1.0; });
  const auto fh = spectral::to_spectral(one);
  CHECK(std::abs(fh.coefficient(0, {0, 0, 0}) - 1.0) < 1e-15);
  CHECK(spectral::l2_norm(fh) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Parseval L2 and grid Lp norms of sin x") {
  const Grid grid(2, 32);
  const auto s = spectral::to_spectral(
      sampled(grid, 1, [](const std::array<double, 3>& x, int) { return std::sin(x[0]); }));
  CHECK(spectral::l2_norm(s) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  // mean of sin^4 = 3/8; max = 1
  CHECK(lp::lp_norm(s, 4.0) == doctest::Approx(std::pow(3.0 / 8.0, 0.25)).epsilon(1e-13));
  CHECK(lp::lp_norm(s, lp::kInfinity) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("spectral derivatives of trigonometric fields are exact") {
  const Grid grid(3, 16);
  const auto f = spectral::to_spectral(sampled(grid, 1, [](const std::array<double, 3>& x, int) {
    return std::sin(2 * x[0]) * std::cos(3 * x[2]);
  }));
  const auto dz = spectral::to_real(spectral::partial(f, 2));
  const auto expected = sampled(grid, 1, [](const std::array<double, 3>& x, int) {
    return -3 * std::sin(2 * x[0]) * std::sin(3 * x[2]);
  });
  CHECK(max_diff(dz, expected) < 1e-12);

  const auto lap = spectral::apply_multiplier(spectral::MultiplierSymbol::laplacian(grid), f);
  auto minus13 = f;
  minus13 *= -13.0;
  CHECK(spectral::l2_norm(lap - minus13) < 1e-13);
}

TEST_CASE("Leray projection matches the per-mode formula and kills gradients") {
  const Grid grid(3, 16);
  spectral::RandomFieldOptions opts;
  opts.components = 3;
  opts.shell = {0.0, 6.0};
  const auto f = spectral::random_field(5, grid, opts);
  const auto pf = spectral::leray_project(f);
  const auto& lat = grid.lattice();
  double worst = 0.0;
  for (std::size_t i = 0; i < lat.k.size(); ++i) {
    if (lat.k2[i] == 0) continue;
    const auto& k = lat.k[i];
    Complex dot = 0;
    for (int c = 0; c < 3; ++c) dot += static_cast<double>(k[c]) * f.component(c)[i];
    for (int c = 0; c < 3; ++c) {
      const Complex want = f.component(c)[i] - static_cast<double>(k[c]) * dot / static_cast<double>(lat.k2[i]);
      worst = std::max(worst, std::abs(pf.component(c)[i] - want));
    }
  }
  CHECK(worst < 1e-15);
  CHECK(spectral::l2_norm(spectral::divergence(pf)) < 1e-13);
  CHECK(spectral::l2_norm(spectral::leray_project(pf) - pf) < 1e-14 * spectral::l2_norm(pf));

  const auto phi = spectral::random_field(6, grid, {1, {0.0, 6.0}});
  auto grad = SpectralField::vector(grid);
  for (int c = 0; c < 3; ++c) {
    const auto d = spectral::partial(phi, c);
    std::copy(d.component(0).begin(), d.component(0).end(), grad.component(c).begin());
  }
  CHECK(spectral::l2_norm(spectral::leray_project(grad)) < 1e-14 * spectral::l2_norm(grad));
}

TEST_CASE("Stokes projector agrees with Leray for every alpha") {
  const Grid grid(2, 32);
  const auto f = spectral::random_field(8, grid, {2, {0.0, 12.0}});
  const auto leray = spectral::leray_project(f);
  for (double a : {0.0, 0.1, 1.0, 10.0, 100.0}) {
    CHECK(spectral::l2_norm(spectral::stokes_project(f, a) - leray) <= 1e-12 * spectral::l2_norm(f));
  }
}

TEST_CASE("Helmholtz inverse undoes Helmholtz") {
  const Grid grid(3, 16);
  const auto f = spectral::random_field(9, grid, {3, {0.0, 7.0}});
  for (double a : {0.0, 0.3, 2.0}) {
    const auto back = spectral::helmholtz_inverse(spectral::helmholtz(f, a), a);
    CHECK(spectral::l2_norm(back - f) < 1e-13 * spectral::l2_norm(f));
  }
}

TEST_CASE("dealiased product of cosines") {
  const Grid grid(2, 16);
  const auto c = sampled(grid, 1, [](const std::array<double, 3>& x, int) { return std::cos(x[0]); });
  const auto sq = spectral::dealiased_product(c, c);
  CHECK(std::abs(sq.coefficient(0, {0, 0, 0}) - 0.5) < 1e-15);
  CHECK(std::abs(sq.coefficient(0, {2, 0, 0}) - 0.25) < 1e-15);
  CHECK(std::abs(sq.coefficient(0, {-2, 0, 0}) - 0.25) < 1e-15);
  // cos(5x)^2 has its 10x part above N/3 and loses it
  const auto c5 = sampled(grid, 1, [](const std::array<double, 3>& x, int) { return std::cos(5 * x[0]); });
  const auto sq5 = spectral::dealiased_product(c5, c5);
  CHECK(spectral::l2_norm(sq5) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("random fields are grid independent and respect the shell") {
  spectral::RandomFieldOptions opts;
  opts.components = 2;
  opts.shell = {2.0, 5.0};
  const Grid coarse(2, 16), fine(2, 32);
  const auto a = spectral::random_field(42, coarse, opts);
  const auto b = spectral::random_field(42, fine, opts);
  const auto& lat = coarse.lattice();
  for (std::size_t i = 0; i < lat.k.size(); ++i) {
    for (int c = 0; c < 2; ++c) {
      CHECK(a.component(c)[i] == b.coefficient(c, lat.k[i]));
      if (lat.radius[i] <= 2.0 || lat.radius[i] >= 5.0) CHECK(a.component(c)[i] == Complex(0.0));
    }
  }
  const auto c = spectral::random_field(43, coarse, opts);
  CHECK(spectral::l2_norm(a - c) > 0.0);
}

TEST_CASE("band-limited random fields live in their annulus") {
  const Grid grid(3, 32);
  const auto f = spectral::random_band_limited(1, 2, grid);
  const auto& lat = grid.lattice();
  for (std::size_t i = 0; i < lat.k.size(); ++i) {
    if (lat.radius[i] <= 2.0 || lat.radius[i] >= 8.0) {
      for (int c = 0; c < f.components(); ++c) CHECK(f.component(c)[i] == Complex(0.0));
    }
  }
  CHECK_THROWS_AS(spectral::random_band_limited(1, 4, grid), std::invalid_argument);
}

TEST_CASE("parallel kernels match the serial reference at any thread count") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  const std::size_t n = 100003;
  std::vector<double> a(n), b(n), w(n);
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = u(rng);
    b[i] = u(rng);
    w[i] = std::abs(u(rng));
    z[i] = {u(rng), u(rng)};
  }
  std::vector<std::span<const double>> comps{a, b};
  const double ref = kernels::serial::weighted_sum_sq(z, w);
  const double ref_p = kernels::serial::sum_norm_pow(comps, 3.0);
  const double ref_max = kernels::serial::max_norm(comps);
  // Reductions use a fixed chunking, so they are bitwise reproducible across
  // thread counts but may differ from the serial sum in the last bits.
  kernels::set_thread_count(1);
  const double one = kernels::parallel::weighted_sum_sq(z, w);
  const double one_p = kernels::parallel::sum_norm_pow(comps, 3.0);
  for (int threads : {1, 2, 3}) {
    kernels::set_thread_count(threads);
    CHECK(kernels::parallel::weighted_sum_sq(z, w) == one);
    CHECK(kernels::parallel::sum_norm_pow(comps, 3.0) == one_p);
    CHECK(kernels::parallel::weighted_sum_sq(z, w) == doctest::Approx(ref).epsilon(1e-13));
    CHECK(kernels::parallel::sum_norm_pow(comps, 3.0) == doctest::Approx(ref_p).epsilon(1e-13));
    CHECK(kernels::parallel::max_norm(comps) == ref_max);
    std::vector<double> out_s(n), out_p(n);
    kernels::serial::multiply(a, b, out_s);
    kernels::parallel::multiply(a, b, out_p);
    CHECK(out_s == out_p);
    kernels::serial::multiply_add(a, b, out_s);
    kernels::parallel::multiply_add(a, b, out_p);
    CHECK(out_s == out_p);
    std::vector<Complex> ys = z, yp = z;
    kernels::serial::scale(ys, w);
    kernels::parallel::scale(yp, w);
    CHECK(ys == yp);
    kernels::serial::axpy(0.3, z, ys);
    kernels::parallel::axpy(0.3, z, yp);
    CHECK(ys == yp);
  }
}

TEST_CASE("snapshot round trip preserves samples and time") {
  const Grid grid(2, 16);
  const auto f = sampled(grid, 2, [](const std::array<double, 3>& x, int c) { return std::sin(x[0] + 2 * c * x[1]); });
  const auto path = std::filesystem::temp_directory_path() / "lanslab_snapshot_test.snap";
  spectral::write_snapshot(path, f, 0.625);
  const auto back = spectral::read_snapshot(path);
  CHECK(back.time == 0.625);
  CHECK(back.field.grid() == grid);
  CHECK(max_diff(back.field, f) == 0.0);
  std::filesystem::remove(path);
}
