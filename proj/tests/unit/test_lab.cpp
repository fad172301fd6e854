#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lanslab/errors.hpp"
#include "lanslab/lab/checks_dynamic.hpp"
#include "lanslab/lab/checks_operators.hpp"
#include "lanslab/lab/checks_static.hpp"
#include "lanslab/lab/functionals.hpp"
#include "lanslab/lans/initial_data.hpp"
#include "lanslab/lans/stepper.hpp"

using namespace lanslab;

TEST_CASE("Simpson is exact for cubics on uniform grids") {
  std::vector<double> t, f;
  for (int i = 0; i <= 8; ++i) {
    t.push_back(0.25 * i);
    f.push_back(std::pow(t.back(), 3) - t.back());
  }
  CHECK(lab::simpson(t, f) == doctest::Approx(4.0 - 2.0).epsilon(1e-14));
}

TEST_CASE("Simpson is exact for quadratics on uneven grids and odd interval counts") {
  const std::vector<double> t{0.0, 0.1, 0.35, 0.4, 0.9, 1.0, 1.7, 2.0};
  std::vector<double> f;
  for (double x : t) f.push_back(3 * x * x - x + 2);
  auto exact = [](double x) { return x * x * x - x * x / 2 + 2 * x; };
  CHECK(lab::simpson(t, f) == doctest::Approx(exact(2.0)).epsilon(1e-13));
  const auto running = lab::cumulative_simpson(t, f);
  REQUIRE(running.size() == t.size());
  CHECK(running[0] == 0.0);
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(running[i] == doctest::Approx(exact(t[i])).epsilon(1e-12));
  for (std::size_t i = 2; i < t.size(); ++i) {
    const std::span<const double> ts(t), fs(f);
    CHECK(running[i] == doctest::Approx(lab::simpson(ts.first(i + 1), fs.first(i + 1))).epsilon(1e-14));
  }
  const std::vector<double> two_t{0.0, 2.0}, two_f{1.0, 3.0};
  CHECK(lab::simpson(two_t, two_f) == 4.0);
}

TEST_CASE("Simpson converges at fourth order on smooth integrands") {
  auto err = [](int m) {
    std::vector<double> t, f;
    for (int i = 0; i <= m; ++i) {
      t.push_back(std::numbers::pi * i / m);
      f.push_back(std::sin(t.back()));
    }
    return std::abs(lab::simpson(t, f) - 2.0);
  };
  CHECK(std::log2(err(8) / err(16)) == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("trial seeds are distinct and reproducible") {
  CHECK(lab::trial_seed(1, 0) == lab::trial_seed(1, 0));
  CHECK(lab::trial_seed(1, 0) != lab::trial_seed(1, 1));
  CHECK(lab::trial_seed(1, 0) != lab::trial_seed(2, 0));
}

TEST_CASE("fast static checks pass on their defaults") {
  CHECK(lab::check_partition_of_unity(spectral::Grid(3, 32)).pass);
  CHECK(lab::check_closed_form_oracles(spectral::Grid(2, 32)).pass);
  lab::StokesParams sp;
  sp.ensemble.size = 4;
  CHECK(lab::check_stokes_leray(sp).pass);
  lab::EnsembleSpec small;
  small.dimension = 2;
  small.points = 32;
  small.size = 4;
  CHECK(lab::check_support_identities(small).pass);
  CHECK(lab::check_paraproduct_reconstruction(small).pass);
}

TEST_CASE("reports record ratios and a finite maximum") {
  lab::EnsembleSpec spec;
  spec.dimension = 2;
  spec.points = 32;
  spec.size = 5;
  const auto rep = lab::check_product_blocks(spec);
  CHECK(rep.pass);
  CHECK(rep.ratios.size() == 5);
  CHECK(std::isfinite(rep.max_ratio));
  CHECK(rep.status == "ok");
  CHECK(rep.to_json()["check_id"] == rep.check_id);
}

TEST_CASE("parameter gates reject inadmissible tuples with every violation listed") {
  lab::ProductParams pp;
  pp.p1 = 5.0;  // > 2p
  pp.s = -1.0;
  try {
    lab::check_product(pp);
    FAIL("expected rejection");
  } catch (const ParameterError& e) {
    CHECK(e.violations().size() >= 2);
  }
  lab::TauParams tp;
  tp.r = 2.5;  // 3D: s_bar = 1.5 is not below r - 1
  CHECK_THROWS_AS(lab::check_tau(tp), ParameterError);
  lab::HeatParams hp;
  hp.s1 = -1.0;
  CHECK_THROWS_AS(lab::check_heat_smoothing(hp), ParameterError);
  CHECK_THROWS_AS(lab::require_gronwall_indices(1.5, 2.0), ParameterError);
  CHECK_THROWS_AS(lab::require_gronwall_indices(2.5, lp::kInfinity), ParameterError);
  CHECK_NOTHROW(lab::require_gronwall_indices(2.5, 1.0));
}

TEST_CASE("heat smoothing holds for sigma = 0 and sigma = 1") {
  lab::HeatParams hp;
  hp.ensemble.dimension = 2;
  hp.ensemble.size = 3;
  hp.s0 = 1.0;
  CHECK(lab::check_heat_smoothing(hp).pass);
  hp.s0 = 0.0;
  CHECK(lab::check_heat_smoothing(hp).pass);
}

TEST_CASE("energy check flags a growing series") {
  lab::EnergySeries good;
  good.alpha = 1.0;
  const spectral::Grid grid(2, 16);
  auto cfg = lans::SolverConfig{};
  cfg.dimension = 2;
  cfg.points = 16;
  cfg.dt = 0.05;
  cfg.horizon = 0.5;
  lans::solve_ivp(lans::taylor_green(grid, 1.0), cfg, [&](double t, const spectral::SpectralField& u) { good.add(t, u); });
  CHECK(lab::check_energy_monotone(good).pass);

  lab::EnergySeries bad = good;
  bad.energy[5] = bad.energy[4] * 1.001;
  CHECK_FALSE(lab::check_energy_monotone(bad).pass);
}

TEST_CASE("Gronwall and a-priori constants on a short run") {
  const spectral::Grid grid(2, 16);
  lans::SolverConfig cfg;
  cfg.dimension = 2;
  cfg.points = 16;
  cfg.dt = 0.02;
  cfg.horizon = 0.4;
  const auto traj = lans::solve_ivp(lans::taylor_green(grid, 1.0), cfg);
  cfg.dt = 0.01;
  cfg.sample_stride = 2;
  const auto fine = lans::solve_ivp(lans::taylor_green(grid, 1.0), cfg);
  const auto rep = lab::check_gronwall_differential(traj, {}, &fine);
  CHECK(rep.pass);
  CHECK(std::isfinite(rep.max_ratio));

  const auto prof = lab::apriori_profile(traj, {});
  CHECK(prof.defined);
  CHECK(std::isfinite(prof.sup()));
  const auto zero = lans::solve_ivp(lans::zero_velocity(grid), cfg);
  CHECK_FALSE(lab::apriori_profile(zero, {}).defined);
}

TEST_CASE("operator time grid mixes logarithmic and uniform points") {
  lab::OperatorSetup setup;
  const auto t = setup.times();
  REQUIRE(t.size() == static_cast<std::size_t>(setup.time_points));
  CHECK(t.front() == 0.0);
  CHECK(t[1] == doctest::Approx(setup.t_min));
  CHECK(t.back() == doctest::Approx(setup.horizon));
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] > t[i - 1]);
}
