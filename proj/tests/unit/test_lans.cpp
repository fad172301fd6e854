#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lanslab/lans/existence.hpp"
#include "lanslab/lans/initial_data.hpp"
#include "lanslab/lans/nonlinear.hpp"
#include "lanslab/lans/picard.hpp"
#include "lanslab/lans/semigroup.hpp"
#include "lanslab/lans/stepper.hpp"
#include "lanslab/spectral/fft.hpp"
#include "lanslab/spectral/multiplier.hpp"
#include "lanslab/spectral/projection.hpp"

using namespace lanslab;
using lans::SolverConfig;
using lans::Trajectory;
using spectral::Grid;
using spectral::RealField;
using spectral::SpectralField;

namespace {

double max_diff(const RealField& a, const RealField& b) {
  double m = 0.0;
  for (int c = 0; c < a.components(); ++c) {
    for (std::size_t i = 0; i < a.component(c).size(); ++i) {
      m = std::max(m, std::abs(a.component(c)[i] - b.component(c)[i]));
    }
  }
  return m;
}

SolverConfig small_config(int n, int points, double dt, double horizon) {
  SolverConfig cfg;
  cfg.dimension = n;
  cfg.points = points;
  cfg.dt = dt;
  cfg.horizon = horizon;
  return cfg;
}

}  // namespace

TEST_CASE("shear flow: stress divergence by hand") {
  // G_12 = cos y, so Def Rot = diag(-cos^2 y / 4, cos^2 y / 4, 0). The inverse
  // Helmholtz operator divides the cos 2y part by 1 + 4 alpha^2.
  const Grid grid(3, 16);
  const auto u = lans::shear_flow(grid);
  for (double alpha : {0.5, 1.0, 2.0}) {
    const auto div_tau = spectral::to_real(lans::reynolds_stress_divergence(u, alpha));
    const double a2 = alpha * alpha;
    const auto expected = RealField::sample(grid, 3, [&](const std::array<double, 3>& x, int c) {
      return c == 1 ? -a2 * std::sin(2 * x[1]) / (4.0 * (1 + 4 * a2)) : 0.0;
    });
    CHECK(max_diff(div_tau, expected) < 1e-14);
  }
  const auto at_one = spectral::to_real(lans::reynolds_stress_divergence(u, 1.0));
  double peak = 0.0;
  for (double v : at_one.component(1)) peak = std::max(peak, std::abs(v));
  CHECK(peak == doctest::Approx(1.0 / 20.0).epsilon(1e-12));
}

TEST_CASE("stress vanishes at alpha = 0 and Def Rot is not symmetric in general") {
  const Grid grid(3, 16);
  const auto u = lans::random_solenoidal(4, grid, 1.0, 5.0);
  CHECK(spectral::max_abs(lans::reynolds_stress(u, 0.0)) == 0.0);
  const auto dr = lans::def_rot_product(u);
  REQUIRE(dr.components() == 9);
  double asym = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      asym = std::max(asym, spectral::l2_norm(spectral::select_components(dr, 3 * i + j, 1) -
                                              spectral::select_components(dr, 3 * j + i, 1)));
    }
  }
  CHECK(asym > 1e-3);
}

TEST_CASE("Def Rot product against a pointwise evaluation") {
  const Grid grid(2, 16);
  // u = (cos y, cos x): G = [[0, -sin y], [-sin x, 0]]
  const auto u = spectral::to_spectral(RealField::sample(grid, 2, [](const std::array<double, 3>& x, int c) {
    return c == 0 ? std::cos(x[1]) : std::cos(x[0]);
  }));
  const auto dr = spectral::to_real(lans::def_rot_product(u));
  const auto expected = RealField::sample(grid, 4, [](const std::array<double, 3>& x, int c) {
    const double a = -std::sin(x[1]), b = -std::sin(x[0]);
    const double d = (a + b) / 2, r = (a - b) / 2;
    // Def = [[0, d], [d, 0]], Rot = [[0, r], [-r, 0]]
    const double m[4] = {-d * r, 0.0, 0.0, d * r};
    return m[c];
  });
  CHECK(max_diff(dr, expected) < 1e-14);
}

TEST_CASE("projected nonlinearity is divergence free and vanishes on shear") {
  const Grid grid(3, 16);
  const auto u = lans::random_solenoidal(7, grid, 1.0, 5.0);
  const auto pv = lans::projected_nonlinearity(u, 1.0);
  CHECK(spectral::l2_norm(spectral::divergence(pv)) < 1e-13 * spectral::l2_norm(pv));
  CHECK(spectral::l2_norm(lans::projected_nonlinearity(lans::shear_flow(grid), 1.0)) < 1e-15);
}

TEST_CASE("shear decays like exp(-nu t) under the full solver") {
  const Grid grid(3, 16);
  auto cfg = small_config(3, 16, 0.05, 1.0);
  cfg.nu = 0.7;
  const auto traj = lans::solve_ivp(lans::shear_flow(grid), cfg);
  auto expected = lans::shear_flow(grid);
  expected *= std::exp(-0.7);
  CHECK(spectral::l2_norm(traj.back().u - expected) < 1e-14);
}

TEST_CASE("stepper is fourth order") {
  const Grid grid(2, 16);
  const auto u0 = lans::random_solenoidal(3, grid, 2.0, 5.0);
  auto run = [&](double dt) { return lans::solve_ivp(u0, small_config(2, 16, dt, 0.4)).back().u; };
  const auto ref = run(0.4 / 256);
  const double e1 = spectral::l2_norm(run(0.4 / 8) - ref);
  const double e2 = spectral::l2_norm(run(0.4 / 16) - ref);
  CHECK(e1 > 0.0);
  CHECK(std::log2(e1 / e2) > 3.5);
}

TEST_CASE("energy of Taylor-Green decreases step by step") {
  const Grid grid(3, 16);
  std::vector<double> energy;
  auto cfg = small_config(3, 16, 0.01, 0.5);
  lans::solve_ivp(lans::taylor_green(grid, 1.0), cfg,
                  [&](double, const SpectralField& u) { energy.push_back(lans::lans_energy(u, cfg.alpha)); });
  REQUIRE(energy.size() == 51);
  for (std::size_t i = 1; i < energy.size(); ++i) CHECK(energy[i] < energy[i - 1]);
}

TEST_CASE("solver rejects bad input and reports blow-up") {
  const Grid grid(2, 16);
  auto bad = lans::zero_velocity(grid);
  bad.set_coefficient(0, {1, 0, 0}, {0.5, 0.0});  // cos x in the first component
  CHECK_THROWS_AS(lans::solve_ivp(bad, small_config(2, 16, 0.1, 1.0)), std::invalid_argument);
  auto cfg = small_config(2, 16, 0.1, 1.0);
  cfg.nu = -1.0;
  CHECK_THROWS_AS(lans::solve_ivp(lans::zero_velocity(grid), cfg), std::invalid_argument);

  cfg = small_config(2, 16, 0.5, 1.0);
  cfg.blowup_threshold = 1.0;
  try {
    lans::solve_ivp(lans::random_solenoidal(1, grid, 50.0, 5.0), cfg);
    FAIL("expected blow-up");
  } catch (const lans::BlowUpError& e) {
    CHECK(e.time() > 0.0);
    CHECK(e.partial().size() >= 1);
  }
}

TEST_CASE("semigroup on a single mode") {
  const Grid grid(3, 16);
  auto phi = SpectralField::vector(grid);
  phi.set_coefficient(2, {1, 2, 0}, {0.25, -0.5});
  const auto out = lans::semigroup_apply(phi, 0.3, 0.5);
  CHECK(std::abs(out.coefficient(2, {1, 2, 0}) - std::exp(-0.5 * 0.3 * 5) * std::complex<double>(0.25, -0.5)) <
        1e-15);
  CHECK_THROWS_AS(lans::semigroup_apply(phi, -0.1, 1.0), std::invalid_argument);
}

TEST_CASE("Duhamel integral is exact for forcing linear in time") {
  const Grid grid(2, 16);
  auto phi = SpectralField::vector(grid);
  phi.set_coefficient(0, {0, 3, 0}, {1.0, 0.0});
  const double lambda = 9.0;  // nu |k|^2 with nu = 1
  Trajectory g(Trajectory::Kind::forcing);
  for (int i = 0; i <= 10; ++i) g.push(0.1 * i, (0.1 * i) * phi);
  for (double t : {0.05, 0.37, 1.0}) {
    const double exact = t / lambda - (1 - std::exp(-lambda * t)) / (lambda * lambda);
    CHECK(std::abs(lans::duhamel_apply(g, t, 1.0).coefficient(0, {0, 3, 0}).real() - exact) < 1e-14);
  }
  const auto series = lans::duhamel_series(g, 1.0);
  CHECK(std::abs(series.back().coefficient(0, {0, 3, 0}).real() -
                 (1.0 / lambda - (1 - std::exp(-lambda)) / (lambda * lambda))) < 1e-14);
  CHECK_THROWS_AS(lans::duhamel_apply(g, 1.5, 1.0), std::out_of_range);
}

TEST_CASE("Duhamel quadrature converges at fourth order in the sample spacing") {
  const Grid grid(2, 16);
  auto phi = SpectralField::vector(grid);
  phi.set_coefficient(1, {2, 0, 0}, {1.0, 0.0});
  const double lambda = 4.0, w = 3.0;
  // int_0^1 e^{-lambda (1 - s)} sin(w s) ds
  const double exact = (lambda * std::sin(w) - w * std::cos(w) + w * std::exp(-lambda)) / (lambda * lambda + w * w);
  auto error = [&](int m) {
    Trajectory g(Trajectory::Kind::forcing);
    for (int i = 0; i <= m; ++i) g.push(static_cast<double>(i) / m, std::sin(w * i / m) * phi);
    return std::abs(lans::duhamel_apply(g, 1.0, 1.0).coefficient(1, {2, 0, 0}).real() - exact);
  };
  const double e1 = error(20), e2 = error(40);
  CHECK(std::log2(e1 / e2) > 3.5);
}

TEST_CASE("Picard weight exponent and its admissibility conditions") {
  CHECK(lans::picard_weight_exponent(3, {}) == doctest::Approx(0.25));
  lans::PicardIndices bad;
  bad.r = 1.0;
  CHECK_THROWS_AS(lans::picard_weight_exponent(3, bad), ParameterError);
  try {
    lans::PicardIndices worse;
    worse.p = 0.5;
    worse.s = 0.5;
    lans::picard_weight_exponent(3, worse);
  } catch (const ParameterError& e) {
    CHECK(e.violations().size() >= 2);
  }
}

TEST_CASE("Picard from zero data converges at once") {
  const Grid grid(3, 16);
  const auto res = lans::picard_solve(lans::zero_velocity(grid), small_config(3, 16, 0.1, 0.5), {});
  CHECK(res.report.converged);
  CHECK(res.report.iterates == 1);
  CHECK(spectral::max_abs(res.trajectory.back().u) == 0.0);
}

TEST_CASE("Picard and the stepper agree for small data") {
  const Grid grid(2, 16);
  const auto u0 = lans::taylor_green(grid, 0.05);
  auto cfg = small_config(2, 16, 0.01, 0.5);
  cfg.picard_intervals = 50;
  const auto pic = lans::picard_solve(u0, cfg, {});
  REQUIRE(pic.report.converged);
  for (std::size_t i = 1; i < pic.report.contraction_ratios.size(); ++i) CHECK(pic.report.contraction_ratios[i] < 1.0);
  const auto ivp = lans::solve_ivp(u0, cfg);
  CHECK(spectral::l2_norm(pic.trajectory.back().u - ivp.back().u) < 1e-8 * spectral::l2_norm(ivp.back().u));
}

TEST_CASE("certified existence time does not grow with the amplitude") {
  // 2D Taylor-Green is steady for the nonlinearity, so this runs in 3D.
  const Grid grid(3, 16);
  auto cfg = small_config(3, 16, 0.01, 1.0);
  cfg.picard_intervals = 20;
  lans::ExistenceOptions opts;
  opts.t_cap = 1.0;
  opts.bisection_steps = 5;
  const auto rows = lans::estimate_existence_time({2.0, 100.0, 400.0},
                                                  [&](double a) { return lans::taylor_green(grid, a); }, cfg, {}, opts);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].certified_T == doctest::Approx(1.0));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].certified_T <= rows[i - 1].certified_T);
  CHECK(rows[2].certified_T < 1.0);
  std::ostringstream csv;
  lans::write_existence_csv(csv, rows);
  CHECK(csv.str().rfind("amplitude,norm_r,certified_T,picard_runs\n", 0) == 0);
}

TEST_CASE("trajectory rejects disordered times and divergent samples") {
  const Grid grid(2, 16);
  Trajectory traj;
  traj.push(0.0, lans::zero_velocity(grid));
  CHECK_THROWS_AS(traj.push(0.0, lans::zero_velocity(grid)), std::invalid_argument);
  auto bad = lans::zero_velocity(grid);
  bad.set_coefficient(0, {1, 0, 0}, {0.5, 0.0});
  CHECK_THROWS_AS(traj.push(1.0, bad), std::invalid_argument);
  Trajectory forcing(Trajectory::Kind::forcing);
  CHECK_NOTHROW(forcing.push(0.0, bad));
  CHECK_THROWS_AS(traj.push(1.0, lans::zero_velocity(Grid(2, 32))), std::invalid_argument);
}
