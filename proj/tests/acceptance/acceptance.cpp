// Acceptance suite: one line per criterion, "PASS" or "FAIL", with the
// measured quantity and the wall time. `--only N` runs a single criterion.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lanslab/cli/commands.hpp"
#include "lanslab/errors.hpp"
#include "lanslab/lab/checks_dynamic.hpp"
#include "lanslab/lab/checks_static.hpp"
#include "lanslab/lans/existence.hpp"
#include "lanslab/lans/initial_data.hpp"
#include "lanslab/lans/nonlinear.hpp"
#include "lanslab/lans/picard.hpp"
#include "lanslab/lans/semigroup.hpp"
#include "lanslab/lans/stepper.hpp"
#include "lanslab/lp/norms.hpp"
#include "lanslab/spectral/fft.hpp"
#include "lanslab/spectral/projection.hpp"

using namespace lanslab;
using spectral::Grid;
using spectral::RealField;
using spectral::SpectralField;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

lab::EnsembleSpec ensemble(int n, int points, int size, std::uint64_t seed, double radius) {
  lab::EnsembleSpec e;
  e.dimension = n;
  e.points = points;
  e.size = size;
  e.seed = seed;
  e.radius = radius;
  return e;
}

SpectralField single_mode(const Grid& grid, const spectral::WaveVector& k, int components = 1) {
  SpectralField f(grid, components);
  f.set_coefficient(0, k, {0.5, 0.0});
  return f;
}

Outcome partition_of_unity() {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid grid(3, 32);
  const lp::DyadicFamily family(grid);
  const auto& lat = grid.lattice();
  const double top = std::ldexp(1.0, family.max_index());
  double worst = 0.0;
  for (std::size_t i = 0; i < lat.k.size(); ++i) {
    if (lat.radius[i] > top) continue;
    double sum = family.low()[i];
    for (int j = 0; j <= family.max_index(); ++j) sum += family.psi(j)[i];
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-12 && secs < 1.0, fmt("max |sum - 1| = %.2e", worst) + fmt(", %.2fs (< 1s)", secs)};
}

Outcome support_identities() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = lab::check_support_identities(ensemble(3, 32, 20, 11, 8.0));
  const double secs = seconds_since(t0);
  const double orth = rep.details["orthogonality_max"].get<double>();
  const double lh = rep.details["low_high_max"].get<double>();
  const double hh = rep.details["high_high_max"].get<double>();
  return {orth <= 1e-12 && lh <= 1e-10 && hh <= 1e-10 && secs < 10.0,
          fmt("orthogonality %.2e", orth) + fmt(", low-high %.2e", lh) + fmt(", high-high %.2e", hh) +
              fmt(", %.1fs (< 10s)", secs)};
}

Outcome paraproduct_reconstruction() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = lab::check_paraproduct_reconstruction(ensemble(3, 32, 20, 13, 8.0));
  const double secs = seconds_since(t0);
  return {rep.ratios.size() == 20 && rep.max_ratio <= 1e-8 && secs < 10.0,
          fmt("max relative residual %.2e over 20 pairs", rep.max_ratio) + fmt(", %.1fs (< 10s)", secs)};
}

Outcome bernstein() {
  const Grid grid(3, 32);
  double mode_err = 0.0;
  for (int j = 1; j <= 3; ++j) {
    const auto f = single_mode(grid, {0, 1 << j, 0});
    mode_err = std::max(mode_err, std::abs(lp::bernstein_ratio(f, j, 1.0, 2.0, 2.0) - 1.0));
  }
  lab::BernsteinParams params;
  params.ensemble = ensemble(3, 32, 10, 16, 0.0);
  const auto rep = lab::check_bernstein(params);
  const double spread = rep.details["spread"].get<double>();
  return {mode_err <= 1e-12 && spread <= 4.0 && rep.pass,
          fmt("single-mode |ratio - 1| = %.2e", mode_err) + fmt(", annulus spread max/min = %.3f (<= 4)", spread)};
}

Outcome closed_form_oracles() {
  const Grid grid(3, 16);
  const auto m4 = single_mode(grid, {2, 0, 0});
  const auto m1 = single_mode(grid, {0, 0, 1});
  const double helm = spectral::helmholtz_inverse(m4, 1.0).coefficient(0, {2, 0, 0}).real() / 0.5;
  const double heat = lans::semigroup_apply(m1, 0.1, 1.0).coefficient(0, {0, 0, 1}).real() / 0.5;
  lans::Trajectory g(lans::Trajectory::Kind::forcing);
  for (int i = 0; i <= 8; ++i) g.push(i / 8.0, m4);
  const double duh = lans::duhamel_apply(g, 1.0, 1.0).coefficient(0, {2, 0, 0}).real() / 0.5;
  const double e1 = std::abs(helm - 0.2) / 0.2;
  const double e2 = std::abs(heat - std::exp(-0.1)) / std::exp(-0.1);
  const double ex3 = (1.0 - std::exp(-4.0)) / 4.0;
  const double e3 = std::abs(duh - ex3) / ex3;
  return {e1 <= 1e-10 && e2 <= 1e-10 && e3 <= 1e-10,
          fmt("relative errors: Helmholtz %.1e", e1) + fmt(", semigroup %.1e", e2) + fmt(", Duhamel %.1e", e3)};
}

Outcome stokes_leray() {
  lab::StokesParams params;
  params.ensemble = ensemble(3, 32, 20, 24, 8.0);
  params.alphas = {0.0, 0.1, 1.0, 10.0};
  const auto rep = lab::check_stokes_leray(params);
  return {rep.max_ratio <= 1e-12 && rep.ensemble_size == 20,
          fmt("max ||P^a f - P f|| / ||f|| = %.2e over 20 fields, 4 alphas", rep.max_ratio)};
}

Outcome reynolds_stress_oracle() {
  const Grid grid(3, 32);
  const auto div_tau = spectral::to_real(lans::reynolds_stress_divergence(lans::shear_flow(grid), 1.0));
  auto linf = [&](double denom) {
    double err = 0.0;
    for (int c = 0; c < 3; ++c) {
      const auto v = div_tau.component(c);
      for (std::size_t i = 0; i < v.size(); ++i) {
        const double y = grid.position(i)[1];
        const double want = c == 1 ? -std::sin(2 * y) / denom : 0.0;
        err = std::max(err, std::abs(v[i] - want));
      }
    }
    return err;
  };
  const double err = linf(10.0);
  return {err <= 1e-10, fmt("L-inf error against (0, -sin2y/10, 0) = %.3e", err) +
                            fmt(" (against -sin2y/20: %.1e)", linf(20.0))};
}

Outcome energy_monotone() {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid grid(3, 32);
  lans::SolverConfig cfg;
  cfg.alpha = 1.0;
  cfg.nu = 1.0;
  cfg.dimension = 3;
  cfg.points = 32;
  cfg.dt = 1e-3;
  cfg.horizon = 1.0;
  cfg.sample_stride = 1000;
  lab::EnergySeries series;
  series.alpha = cfg.alpha;
  lans::solve_ivp(lans::taylor_green(grid, 0.1), cfg,
                  [&](double t, const SpectralField& u) { series.add(t, u); });
  const auto rep = lab::check_energy_monotone(series, 1.0);
  const double secs = seconds_since(t0);
  const int violations = rep.details["violations"].get<int>();
  return {rep.pass && rep.ratios.size() == 1000 && secs < 120.0,
          std::to_string(rep.ratios.size()) + " steps, " + std::to_string(violations) +
              fmt(" above C dt^4 E (C = 1), E(0) = %.4e", series.energy.front()) +
              fmt(", E(1) = %.4e", series.energy.back()) + fmt(", %.0fs (< 120s)", secs)};
}

Outcome picard_contraction() {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid grid(3, 32);
  lans::SolverConfig cfg;
  cfg.dimension = 3;
  cfg.points = 32;
  cfg.horizon = 0.5;
  cfg.picard_intervals = 40;
  const auto u0 = lans::taylor_green(grid, 0.01);
  const auto pic = lans::picard_solve(u0, cfg, {});
  bool geometric = true;
  std::string ratios;
  // contraction_ratios[m - 2] compares iteration m with m - 1.
  for (std::size_t i = 0; i < pic.report.contraction_ratios.size(); ++i) {
    const int iteration = static_cast<int>(i) + 2;
    ratios += (ratios.empty() ? "" : " ") + fmt("%.1e", pic.report.contraction_ratios[i]);
    if (iteration > 2) geometric = geometric && pic.report.contraction_ratios[i] < 0.9;
  }
  cfg.dt = 5e-3;
  cfg.sample_stride = 1000;
  const auto ivp = lans::solve_ivp(u0, cfg);
  const double gap = spectral::l2_norm(pic.trajectory.back().u - ivp.back().u) / spectral::l2_norm(ivp.back().u);
  const double secs = seconds_since(t0);
  return {pic.report.converged && geometric && gap <= 1e-6 && secs < 300.0,
          std::to_string(pic.report.iterates) + " iterations, ratios [" + ratios + "]" +
              fmt(", relative L2 gap to the stepper %.2e", gap) + fmt(", %.0fs (< 300s)", secs)};
}

Outcome existence_monotone() {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid grid(3, 16);
  lans::SolverConfig cfg;
  cfg.dimension = 3;
  cfg.points = 16;
  cfg.picard_intervals = 20;
  cfg.picard_max_iter = 30;
  lans::ExistenceOptions opts;
  opts.t_cap = 2.0;
  opts.bisection_steps = 8;
  const auto rows = lans::estimate_existence_time({25.0, 50.0, 100.0},
                                                  [&](double a) { return lans::taylor_green(grid, a); }, cfg, {}, opts);
  bool monotone = true;
  std::string ts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ts += (ts.empty() ? "" : ", ") + fmt("%.4g", rows[i].certified_T);
    if (i > 0) monotone = monotone && rows[i].certified_T <= rows[i - 1].certified_T;
  }
  const double secs = seconds_since(t0);
  return {monotone && secs < 900.0, "certified T for A = 25, 50, 100: " + ts + fmt(", %.0fs (< 900s)", secs)};
}

Outcome apriori_bound() {
  const Grid grid(3, 16);
  lans::SolverConfig cfg;
  cfg.dimension = 3;
  cfg.points = 16;
  cfg.dt = 5e-3;
  cfg.horizon = 2.0;
  cfg.sample_stride = 2;
  std::vector<lans::Trajectory> runs;
  const std::vector<double> amps{0.1, 0.2, 0.4};
  for (double a : amps) runs.push_back(lans::solve_ivp(lans::taylor_green(grid, a), cfg));
  lab::AprioriParams params;
  params.r = 2.5;
  params.q = 2.0;
  params.spread_limit = 10.0;
  const auto rep = lab::check_apriori_bound(runs, amps, params);
  const double spread = rep.details["spread"].get<double>();
  bool gate = false;
  try {
    params.r = 1.5;
    lab::check_apriori_bound(runs, amps, params);
  } catch (const ParameterError&) {
    gate = true;
  }
  bool finite = true;
  for (double r : rep.ratios) finite = finite && std::isfinite(r);
  return {rep.pass && finite && spread < 10.0 && gate,
          fmt("sup C_impl spread max/min = %.3f (< 10)", spread) + (gate ? ", r = 1.5 rejected" : ", r = 1.5 accepted")};
}

Outcome heat_smoothing() {
  lab::HeatParams params;
  params.ensemble = ensemble(3, 32, 10, 22, 8.0);
  params.s0 = 0.0;
  params.s1 = 1.0;
  params.t_min = 1e-4;
  params.t_max = 1.0;
  const auto rep = lab::check_heat_smoothing(params);
  const double slope_err = rep.details["small_t_slope_relative_error"].get<double>();
  return {rep.pass && std::isfinite(rep.max_ratio) && rep.ensemble_size == 10,
          fmt("sigma = 1, sup ratio %.3f", rep.max_ratio) +
              fmt(", small-t slope off sigma/2 by %.1f%% at worst", 100.0 * slope_err)};
}

Outcome alpha_limit() {
  const Grid grid(3, 16);
  lans::SolverConfig cfg;
  cfg.dimension = 3;
  cfg.points = 16;
  cfg.dt = 5e-3;
  cfg.horizon = 0.5;
  cfg.sample_stride = 1000;
  const auto u0 = lans::random_solenoidal(3, grid, 1.0, 4.0, 2.0);
  auto final_state = [&](double alpha) {
    auto c = cfg;
    c.alpha = alpha;
    return lans::solve_ivp(u0, c).back().u;
  };
  const auto reference = final_state(0.0);
  const std::vector<double> alphas{0.025, 0.05, 0.1};
  std::vector<double> x, y;
  for (double a : alphas) {
    x.push_back(std::log(a));
    y.push_back(std::log(spectral::l2_norm(final_state(a) - reference)));
  }
  const double mx = (x[0] + x[1] + x[2]) / 3, my = (y[0] + y[1] + y[2]) / 3;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 3; ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  const double slope = num / den;
  return {std::abs(slope - 2.0) <= 0.5, fmt("log-log slope of the L2 gap %.3f (2 +- 0.5)", slope)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "lanslab_acceptance_determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  std::ofstream(root / "config.json") << R"({
  "solver": {"dimension": 3, "points": 16, "dt": 0.01, "horizon": 0.2, "seed": 17},
  "initial": {"kind": "random", "amplitude": 1.0, "radius": 4},
  "snapshots": [0.1]
})";
  std::vector<std::string> csv, snap;
  std::ostringstream sink;
  for (int i = 0; i < 2; ++i) {
    cli::CommandOptions opts;
    opts.config = root / "config.json";
    opts.out = root / ("run" + std::to_string(i));
    if (cli::run_command("solve", opts, sink, sink) != cli::kExitOk) return {false, "solve failed: " + sink.str()};
    csv.push_back(slurp(opts.out / "trajectory.csv"));
    snap.push_back(slurp(opts.out / "snapshots" / "u_0000.snap"));
  }
  fs::remove_all(root);
  const bool same = !csv[0].empty() && csv[0] == csv[1] && snap[0] == snap[1];
  return {same, std::string("trajectory.csv ") + (csv[0] == csv[1] ? "identical" : "differs") + " (" +
                    std::to_string(csv[0].size()) + " bytes), snapshot " + (snap[0] == snap[1] ? "identical" : "differs")};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion (1-14)");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "partition of unity", partition_of_unity},
      {2, "support identities", support_identities},
      {3, "paraproduct reconstruction", paraproduct_reconstruction},
      {4, "Bernstein ratios", bernstein},
      {5, "closed-form operator oracles", closed_form_oracles},
      {6, "Stokes projector equals Leray", stokes_leray},
      {7, "Reynolds stress shear oracle", reynolds_stress_oracle},
      {8, "energy monotonicity", energy_monotone},
      {9, "Picard contraction", picard_contraction},
      {10, "existence-time monotonicity", existence_monotone},
      {11, "a-priori bound", apriori_bound},
      {12, "heat smoothing", heat_smoothing},
      {13, "alpha -> 0 limit", alpha_limit},
      {14, "determinism", determinism},
  };

  bool all = true;
  bool ran = false;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::printf("criterion %2d %s  %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  if (!ran) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all ? 0 : 1;
}
