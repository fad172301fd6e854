#include "lanslab/cli/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lanslab/errors.hpp"
#include "lanslab/lab/checks_dynamic.hpp"
#include "lanslab/lab/checks_operators.hpp"
#include "lanslab/lab/checks_static.hpp"
#include "lanslab/lans/stepper.hpp"

namespace lanslab::cli {
namespace {

using lab::CheckReport;
using lab::EnsembleSpec;

EnsembleSpec read_ensemble(JsonReader& parent, EnsembleSpec spec = {}) {
  auto r = parent.object("ensemble");
  spec.dimension = r.integer("dimension", spec.dimension);
  spec.points = r.integer("points", spec.points);
  spec.size = r.integer("size", spec.size);
  spec.seed = r.unsigned_integer("seed", spec.seed);
  spec.radius = r.number("radius", spec.radius);
  spec.decay = r.number("decay", spec.decay);
  spec.components = r.integer("components", spec.components);
  spec.mean = r.number("mean", spec.mean);
  spec.divergence_free = r.boolean("divergence_free", spec.divergence_free);
  r.finish();
  if (spec.dimension != 2 && spec.dimension != 3) throw ConfigError(r.where() + ".dimension: must be 2 or 3");
  if (spec.points < 8 || spec.points % 2 != 0) throw ConfigError(r.where() + ".points: must be even and >= 8");
  if (spec.size < 1) throw ConfigError(r.where() + ".size: must be >= 1");
  if (!(spec.radius > 0.0)) throw ConfigError(r.where() + ".radius: must be > 0");
  if (spec.components < 0) throw ConfigError(r.where() + ".components: must be >= 0");
  return spec;
}

spectral::Grid read_grid(JsonReader& r, int dimension, int points) {
  const int n = r.integer("dimension", dimension);
  const int N = r.integer("points", points);
  if (n != 2 && n != 3) throw ConfigError(r.where() + ".dimension: must be 2 or 3");
  if (N < 8 || N % 2 != 0) throw ConfigError(r.where() + ".points: must be even and >= 8");
  return {n, N};
}

// A solver run: {"solver": {...}, "initial": {...}}, small defaults.
struct RunRequest {
  lans::SolverConfig solver;
  InitialData initial;

  lans::Trajectory run() const {
    const spectral::Grid grid(solver.dimension, solver.points);
    return lans::solve_ivp(initial.build(grid, solver.seed), solver);
  }
};

RunRequest read_run(JsonReader& parent) {
  auto r = parent.object("run");
  RunRequest req;
  Json solver = Json::object();
  solver["points"] = 16;
  solver["dt"] = 1e-2;
  solver["horizon"] = 0.5;
  if (r.has("solver")) {
    const Json& given = r.raw("solver");
    if (!given.is_object()) throw ConfigError(r.where() + ".solver: expected a JSON object");
    solver.update(given);
  }
  JsonReader sr(solver, r.where() + ".solver");
  req.solver = read_solver(sr);
  auto ir = r.object("initial");
  req.initial = read_initial(ir);
  r.finish();
  return req;
}

lab::MappingIndices read_mapping(JsonReader& r, lab::MappingIndices idx = {}) {
  idx.s0 = r.number("s0", idx.s0);
  idx.p0 = r.exponent("p0", idx.p0);
  idx.s1 = r.number("s1", idx.s1);
  idx.p1 = r.exponent("p1", idx.p1);
  idx.q = r.exponent("q", idx.q);
  return idx;
}

lab::OperatorSetup read_setup(JsonReader& r) {
  lab::OperatorSetup setup;
  setup.ensemble = read_ensemble(r, setup.ensemble);
  setup.horizon = r.number("horizon", setup.horizon);
  setup.t_min = r.number("t_min", setup.t_min);
  setup.time_points = r.integer("time_points", setup.time_points);
  setup.nu = r.number("nu", setup.nu);
  if (setup.time_points < 5 || !(setup.nu > 0.0) ||
      !(setup.t_min > 0.0 && setup.t_min < setup.horizon / ((setup.time_points - 1) / 2))) {
    throw ConfigError(r.where() + ": need time_points >= 5, nu > 0, 0 < t_min < 2 horizon / (time_points - 1)");
  }
  return setup;
}

lab::NonlinearIndices read_nonlinear(JsonReader& r, double exponent) {
  lab::NonlinearIndices idx;
  idx.exponent = exponent;
  idx.r = r.number("r", idx.r);
  idx.p = r.exponent("p", idx.p);
  idx.p_bar = r.exponent("p_bar", idx.p_bar);
  idx.q = r.exponent("q", idx.q);
  idx.alpha = r.number("alpha", idx.alpha);
  return idx;
}

using Runner = std::function<CheckReport(JsonReader&)>;

const std::map<std::string, Runner>& registry() {
  static const std::map<std::string, Runner> table = {
      {"partition_of_unity",
       [](JsonReader& r) {
         const auto grid = read_grid(r, 3, 32);
         r.finish();
         return lab::check_partition_of_unity(grid);
       }},
      {"support_identities",
       [](JsonReader& r) {
         const auto spec = read_ensemble(r);
         r.finish();
         return lab::check_support_identities(spec);
       }},
      {"paraproduct_reconstruction",
       [](JsonReader& r) {
         const auto spec = read_ensemble(r);
         r.finish();
         return lab::check_paraproduct_reconstruction(spec);
       }},
      {"product_block_decomposition",
       [](JsonReader& r) {
         const auto spec = read_ensemble(r);
         r.finish();
         return lab::check_product_blocks(spec);
       }},
      {"paraproduct_bounds",
       [](JsonReader& r) {
         lab::ParaproductBoundsParams p;
         p.ensemble = read_ensemble(r);
         p.p = r.exponent("p", p.p);
         p.j_min = r.integer("j_min", p.j_min);
         p.j_max = r.integer("j_max", p.j_max);
         p.tail_r = r.numbers("tail_r", p.tail_r);
         p.tail_terms = r.integer("tail_terms", p.tail_terms);
         r.finish();
         return lab::check_paraproduct_bounds(p);
       }},
      {"bernstein",
       [](JsonReader& r) {
         lab::BernsteinParams p;
         p.ensemble = read_ensemble(r);
         p.alpha = r.number("alpha", p.alpha);
         p.p = r.exponent("p", p.p);
         p.q = r.exponent("q", p.q);
         p.j_min = r.integer("j_min", p.j_min);
         p.j_max = r.integer("j_max", p.j_max);
         p.spread_limit = r.number("spread_limit", p.spread_limit);
         r.finish();
         return lab::check_bernstein(p);
       }},
      {"embedding",
       [](JsonReader& r) {
         lab::EmbeddingParams p;
         p.ensemble = read_ensemble(r);
         p.p = r.exponent("p", p.p);
         p.beta1 = r.number("beta1", p.beta1);
         p.beta2 = r.number("beta2", p.beta2);
         p.q1 = r.exponent("q1", p.q1);
         p.q2 = r.exponent("q2", p.q2);
         p.p1 = r.exponent("p1", p.p1);
         p.p2 = r.exponent("p2", p.p2);
         p.gamma2 = r.number("gamma2", p.gamma2);
         p.q = r.exponent("q", p.q);
         p.s = r.number("s", p.s);
         r.finish();
         return lab::check_embedding(p);
       }},
      {"product_estimate",
       [](JsonReader& r) {
         lab::ProductParams p;
         p.ensemble = read_ensemble(r, {3, 32, 20, 1, 5.0});
         p.s = r.number("s", p.s);
         p.p = r.exponent("p", p.p);
         p.p1 = r.exponent("p1", p.p1);
         p.q = r.exponent("q", p.q);
         p.refine = r.boolean("refine", p.refine);
         r.finish();
         return lab::check_product(p);
       }},
      {"moser_leibniz",
       [](JsonReader& r) {
         lab::MoserParams p;
         p.ensemble = read_ensemble(r, {3, 32, 20, 1, 5.0});
         p.s = r.number("s", p.s);
         p.p = r.exponent("p", p.p);
         p.p1 = r.exponent("p1", p.p1);
         p.p2 = r.exponent("p2", p.p2);
         p.r1 = r.exponent("r1", p.r1);
         p.r2 = r.exponent("r2", p.r2);
         p.q = r.exponent("q", p.q);
         p.refine = r.boolean("refine", p.refine);
         r.finish();
         return lab::check_moser(p);
       }},
      {"tau_estimate",
       [](JsonReader& r) {
         lab::TauParams p;
         p.ensemble = read_ensemble(r, {3, 32, 20, 1, 5.0});
         p.r = r.number("r", p.r);
         p.p = r.exponent("p", p.p);
         p.p_bar = r.exponent("p_bar", p.p_bar);
         p.q = r.exponent("q", p.q);
         p.alpha = r.number("alpha", p.alpha);
         p.refine = r.boolean("refine", p.refine);
         r.finish();
         return lab::check_tau(p);
       }},
      {"heat_smoothing",
       [](JsonReader& r) {
         lab::HeatParams p;
         p.ensemble = read_ensemble(r, {3, 32, 10});
         p.s0 = r.number("s0", p.s0);
         p.p0 = r.exponent("p0", p.p0);
         p.s1 = r.number("s1", p.s1);
         p.p1 = r.exponent("p1", p.p1);
         p.q = r.exponent("q", p.q);
         p.t_min = r.number("t_min", p.t_min);
         p.t_max = r.number("t_max", p.t_max);
         p.t_points = r.integer("t_points", p.t_points);
         r.finish();
         return lab::check_heat_smoothing(p);
       }},
      {"closed_form_oracles",
       [](JsonReader& r) {
         const auto grid = read_grid(r, 3, 32);
         r.finish();
         return lab::check_closed_form_oracles(grid);
       }},
      {"stokes_equals_leray",
       [](JsonReader& r) {
         lab::StokesParams p;
         p.ensemble = read_ensemble(r);
         p.alphas = r.numbers("alphas", p.alphas);
         r.finish();
         return lab::check_stokes_leray(p);
       }},
      {"energy_monotone",
       [](JsonReader& r) {
         const auto run = read_run(r);
         const double c = r.number("tolerance_constant", 1.0);
         r.finish();
         return lab::check_energy_monotone(lab::EnergySeries::of(run.run(), run.solver.alpha), c);
       }},
      {"gronwall_differential",
       [](JsonReader& r) {
         lab::GronwallParams p;
         p.r = r.number("r", p.r);
         p.q = r.exponent("q", p.q);
         p.refinement_tolerance = r.number("refinement_tolerance", p.refinement_tolerance);
         const bool refine = r.boolean("refine", true);
         auto run = read_run(r);
         r.finish();
         lab::require_gronwall_indices(p.r, p.q);
         const auto coarse = run.run();
         if (!refine) return lab::check_gronwall_differential(coarse, p);
         run.solver.dt /= 2.0;
         run.solver.sample_stride *= 2;
         const auto fine = run.run();
         return lab::check_gronwall_differential(coarse, p, &fine);
       }},
      {"apriori_bound",
       [](JsonReader& r) {
         lab::AprioriParams p;
         p.r = r.number("r", p.r);
         p.q = r.exponent("q", p.q);
         p.spread_limit = r.number("spread_limit", p.spread_limit);
         const auto amplitudes = r.numbers("amplitudes", {0.1, 0.2, 0.4});
         auto run = read_run(r);
         r.finish();
         lab::require_gronwall_indices(p.r, p.q);
         std::vector<lans::Trajectory> runs;
         for (double a : amplitudes) {
           run.initial.amplitude = a;
           runs.push_back(run.run());
         }
         return lab::check_apriori_bound(runs, amplitudes, p);
       }},
      {"semigroup_weighted_mapping",
       [](JsonReader& r) {
         const auto setup = read_setup(r);
         const auto idx = read_mapping(r);
         r.finish();
         return lab::check_semigroup_weighted_mapping(setup, idx);
       }},
      {"semigroup_time_integrability",
       [](JsonReader& r) {
         const auto setup = read_setup(r);
         const auto idx = read_mapping(r);
         r.finish();
         return lab::check_semigroup_time_integrability(setup, idx);
       }},
      {"duhamel_weighted_mapping",
       [](JsonReader& r) {
         const auto setup = read_setup(r);
         const auto idx = read_mapping(r);
         const double k0 = r.number("k0", 0.25);
         r.finish();
         return lab::check_duhamel_weighted_mapping(setup, idx, k0);
       }},
      {"duhamel_integral_mapping",
       [](JsonReader& r) {
         const auto setup = read_setup(r);
         const auto idx = read_mapping(r, {0.0, 2.0, 0.5, 2.0, 2.0});
         const double sigma0 = r.number("sigma0", 2.0);
         r.finish();
         return lab::check_duhamel_integral_mapping(setup, idx, sigma0);
       }},
      {"duhamel_continuity",
       [](JsonReader& r) {
         const auto setup = read_setup(r);
         const auto idx = read_mapping(r);
         r.finish();
         return lab::check_duhamel_continuity(setup, idx);
       }},
      {"nonlinearity_weighted_mapping",
       [](JsonReader& r) {
         const auto setup = read_setup(r);
         const auto idx = read_nonlinear(r, r.number("a", 0.5));
         r.finish();
         return lab::check_nonlinearity_weighted_mapping(setup, idx);
       }},
      {"nonlinearity_time_integrability",
       [](JsonReader& r) {
         const auto setup = read_setup(r);
         const auto idx = read_nonlinear(r, r.number("sigma", 4.0));
         r.finish();
         return lab::check_nonlinearity_time_integrability(setup, idx);
       }},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& item : registry()) out.push_back(item.first);
    return out;
  }();
  return ids;
}

std::vector<SuiteEntry> parse_suite(const Json& doc) {
  JsonReader root(doc, "suite");
  std::vector<SuiteEntry> out;
  if (root.has("checks")) {
    const Json& checks = root.raw("checks");
    if (!checks.is_array()) throw ConfigError("suite.checks: expected an array");
    for (std::size_t i = 0; i < checks.size(); ++i) {
      JsonReader entry(checks[i], "suite.checks[" + std::to_string(i) + "]");
      SuiteEntry e;
      e.id = entry.string("id", "");
      if (e.id.empty()) throw ConfigError(entry.where() + ".id: missing");
      if (!registry().count(e.id)) throw UnknownCheckError(e.id);
      if (entry.has("params")) {
        e.params = entry.raw("params");
        if (!e.params.is_object()) throw ConfigError(entry.where() + ".params: expected a JSON object");
      }
      e.emit_ratios = entry.boolean("emit_ratios", false);
      entry.finish();
      out.push_back(std::move(e));
    }
  }
  root.finish();
  return out;
}

CheckReport run_check(const SuiteEntry& entry) {
  const auto it = registry().find(entry.id);
  if (it == registry().end()) throw UnknownCheckError(entry.id);
  JsonReader reader(entry.params, entry.id);
  try {
    return it->second(reader);
  } catch (const ParameterError& e) {
    return lab::rejected_report(entry.id, entry.params, e.context(), e.violations());
  }
}

}  // namespace lanslab::cli
