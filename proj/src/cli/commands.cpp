#include "lanslab/cli/commands.hpp"

#include <chrono>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "lanslab/cli/suite.hpp"
#include "lanslab/errors.hpp"
#include "lanslab/lans/existence.hpp"
#include "lanslab/lans/picard.hpp"
#include "lanslab/lans/stepper.hpp"
#include "lanslab/lp/norms.hpp"
#include "lanslab/spectral/fft.hpp"
#include "lanslab/spectral/snapshot.hpp"

namespace lanslab::cli {
namespace {

namespace fs = std::filesystem;

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

std::ofstream open_output(const fs::path& path) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

void write_json(const fs::path& path, const Json& doc) {
  auto out = open_output(path);
  out << doc.dump(2) << '\n';
}

RunConfig load_with_seed(const CommandOptions& opts) {
  auto cfg = load_run_config(opts.config);
  if (opts.seed) cfg.solver.seed = *opts.seed;
  return cfg;
}

std::vector<lans::DiagnosticsRow> diagnose(const lans::Trajectory& traj, const RunConfig& cfg) {
  const lp::DyadicFamily family(traj.grid());
  return lans::diagnostics(traj, family, cfg.solver.alpha, cfg.diag_r, cfg.diag_q);
}

void write_trajectory_csv(Manifest& manifest, const lans::Trajectory& traj, const RunConfig& cfg) {
  auto out = open_output(manifest.output("trajectory.csv"));
  lans::write_diagnostics_csv(out, diagnose(traj, cfg));
}

void write_row(std::ostream& out, const lans::DiagnosticsRow& r) {
  out << r.t << ',' << r.energy << ',' << r.l2 << ',' << r.grad_l2 << ',' << r.besov_r << ',' << r.besov_critical
      << ',' << r.div_residual;
}

// The last diagnostics row of a run that keeps only its end points.
struct RunSummary {
  lans::DiagnosticsRow row;
  spectral::SpectralField final_state;
};

RunSummary summarize(const spectral::SpectralField& u0, lans::SolverConfig solver, const RunConfig& cfg) {
  solver.sample_stride = INT_MAX;
  const auto traj = lans::solve_ivp(u0, solver);
  const lp::DyadicFamily family(traj.grid());
  lans::Trajectory last;
  last.push(traj.back().t, traj.back().u);
  return {lans::diagnostics(last, family, solver.alpha, cfg.diag_r, cfg.diag_q).front(), traj.back().u};
}

}  // namespace

Manifest::Manifest(std::string command, const CommandOptions& opts, Json config,
                   std::optional<std::uint64_t> seed)
    : command_(std::move(command)), dir_(opts.out), config_(std::move(config)), seed_(seed),
      start_(now_seconds()) {
  fs::create_directories(dir_);
}

fs::path Manifest::output(const std::string& relative) {
  const fs::path rel = fs::path(relative).lexically_normal();
  if (rel.is_absolute() || rel.empty() || *rel.begin() == "..") {
    throw std::runtime_error("output path escapes the output directory: " + relative);
  }
  outputs_.push_back(rel.generic_string());
  fs::create_directories((dir_ / rel).parent_path());
  return dir_ / rel;
}

void Manifest::write(int exit_code) {
  Json doc = {{"artifact", kArtifactVersion},
              {"command", command_},
              {"exit_code", exit_code},
              {"seed", seed_ ? Json(*seed_) : Json(nullptr)},
              {"output_dir", dir_.generic_string()},
              {"config", config_},
              {"outputs", outputs_}};
  for (const auto& item : extra_.items()) doc[item.key()] = item.value();
  doc["timing"] = {{"command_seconds", now_seconds() - start_}};
  write_json(dir_ / "manifest.json", doc);
}

int cmd_solve(const CommandOptions& opts, std::ostream& log) {
  const auto cfg = load_with_seed(opts);
  Manifest manifest("solve", opts, cfg.to_json(), cfg.solver.seed);
  const spectral::Grid grid(cfg.solver.dimension, cfg.solver.points);
  const auto u0 = cfg.initial.build(grid, cfg.solver.seed);

  const auto steps = static_cast<long>(std::ceil(cfg.solver.horizon / cfg.solver.dt - 1e-9));
  const double h = cfg.solver.horizon / static_cast<double>(steps);
  std::vector<bool> taken(cfg.snapshot_times.size(), false);
  int snapshot_count = 0;
  auto observer = [&](double t, const spectral::SpectralField& u) {
    for (std::size_t i = 0; i < cfg.snapshot_times.size(); ++i) {
      if (taken[i] || std::abs(t - cfg.snapshot_times[i]) > h / 2) continue;
      taken[i] = true;
      std::ostringstream name;
      name << "snapshots/u_" << std::setw(4) << std::setfill('0') << snapshot_count++ << ".snap";
      spectral::write_snapshot(manifest.output(name.str()), spectral::to_real(u), t);
    }
  };

  try {
    const auto traj = lans::solve_ivp(u0, cfg.solver, observer);
    write_trajectory_csv(manifest, traj, cfg);
    log << "solve: " << traj.size() << " samples to t=" << traj.back().t << '\n';
    manifest.write(kExitOk);
    return kExitOk;
  } catch (const lans::BlowUpError& e) {
    write_trajectory_csv(manifest, e.partial(), cfg);
    manifest.set("blow_up", {{"t", e.time()}, {"message", e.what()}});
    log << "solve: " << e.what() << '\n';
    manifest.write(kExitBlowUp);
    return kExitBlowUp;
  }
}

int cmd_picard(const CommandOptions& opts, std::ostream& log) {
  const auto cfg = load_with_seed(opts);
  Manifest manifest("picard", opts, cfg.to_json(), cfg.solver.seed);
  const spectral::Grid grid(cfg.solver.dimension, cfg.solver.points);
  const auto u0 = cfg.initial.build(grid, cfg.solver.seed);
  const auto result = lans::picard_solve(u0, cfg.solver, cfg.picard, cfg.picard_radius);
  const auto& rep = result.report;

  write_json(manifest.output("picard_report.json"), rep.to_json());
  {
    auto out = open_output(manifest.output("residuals.csv"));
    out << "iteration,residual,contraction_ratio,membership\n" << std::setprecision(17);
    for (std::size_t i = 0; i < rep.residuals.size(); ++i) {
      out << i + 1 << ',' << rep.residuals[i] << ',';
      if (i > 0 && i - 1 < rep.contraction_ratios.size()) out << rep.contraction_ratios[i - 1];
      out << ',';
      if (i < rep.membership.size()) out << rep.membership[i];
      out << '\n';
    }
  }
  write_trajectory_csv(manifest, result.trajectory, cfg);
  const int code = rep.converged ? kExitOk : kExitNotConverged;
  log << "picard: " << (rep.converged ? "converged" : "not converged") << " after " << rep.iterates
      << " iterations" << (rep.failure.empty() ? "" : " (" + rep.failure + ")") << '\n';
  manifest.write(code);
  return code;
}

int cmd_verify(const CommandOptions& opts, std::ostream& log) {
  const Json doc = parse_json_file(opts.config);
  std::vector<SuiteEntry> entries;
  try {
    entries = parse_suite(doc);
  } catch (const ConfigError& e) {
    throw ConfigError(opts.config.string() + ": " + e.what());
  }
  Manifest manifest("verify", opts, doc);
  Json reports = Json::array();
  bool all_pass = true;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto rep = run_check(entries[i]);
    all_pass = all_pass && rep.pass;
    reports.push_back(rep.to_json());
    if (entries[i].emit_ratios) {
      std::ostringstream name;
      name << "ratios/" << std::setw(3) << std::setfill('0') << i << '_' << rep.check_id << ".csv";
      auto out = open_output(manifest.output(name.str()));
      lab::write_ratios_csv(out, rep);
    }
    log << (rep.pass ? "PASS " : rep.status == "rejected" ? "REJECTED " : "FAIL ") << rep.check_id
        << " max_ratio=" << std::setprecision(6) << rep.max_ratio << '\n';
  }
  write_json(manifest.output("reports.json"), {{"all_pass", all_pass}, {"reports", reports}});
  const int code = all_pass ? kExitOk : kExitCheckFailed;
  manifest.write(code);
  return code;
}

int cmd_sweep(const CommandOptions& opts, std::ostream& log) {
  const auto cfg = load_with_seed(opts);
  if (!cfg.sweep) throw ConfigError(opts.config.string() + ": sweep section is required");
  const auto& sweep = *cfg.sweep;
  Manifest manifest("sweep", opts, cfg.to_json(), cfg.solver.seed);
  auto out = open_output(manifest.output("sweep.csv"));
  out << std::setprecision(17);
  const char* summary_header = "t,E,u_l2,grad_u_l2,besov_r,besov_crit,div_residual";

  try {
    if (sweep.axis == "amplitude") {
      const spectral::Grid grid(cfg.solver.dimension, cfg.solver.points);
      auto data = [&](double a) {
        InitialData d = cfg.initial;
        d.amplitude = a;
        return d.build(grid, cfg.solver.seed);
      };
      const auto rows = lans::estimate_existence_time(sweep.values, data, cfg.solver, cfg.picard, sweep.existence);
      lans::write_existence_csv(out, rows);
      log << "sweep: " << rows.size() << " amplitudes\n";
    } else if (sweep.axis == "alpha") {
      const spectral::Grid grid(cfg.solver.dimension, cfg.solver.points);
      const auto u0 = cfg.initial.build(grid, cfg.solver.seed);
      lans::SolverConfig base = cfg.solver;
      base.alpha = 0.0;
      const auto reference = summarize(u0, base, cfg);
      out << "alpha," << summary_header << ",l2_gap\n";
      std::vector<double> log_a, log_gap;
      for (double a : sweep.values) {
        lans::SolverConfig run = cfg.solver;
        run.alpha = a;
        const auto s = summarize(u0, run, cfg);
        const double gap = spectral::l2_norm(s.final_state - reference.final_state);
        out << a << ',';
        write_row(out, s.row);
        out << ',' << gap << '\n';
        if (a > 0.0 && gap > 0.0) {
          log_a.push_back(std::log(a));
          log_gap.push_back(std::log(gap));
        }
      }
      if (log_a.size() >= 2) {
        double ma = 0.0, mg = 0.0;
        for (std::size_t i = 0; i < log_a.size(); ++i) {
          ma += log_a[i];
          mg += log_gap[i];
        }
        ma /= log_a.size();
        mg /= log_a.size();
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < log_a.size(); ++i) {
          num += (log_a[i] - ma) * (log_gap[i] - mg);
          den += (log_a[i] - ma) * (log_a[i] - ma);
        }
        manifest.set("alpha_gap_loglog_slope", num / den);
        log << "sweep: log-log slope of the alpha gap " << num / den << '\n';
      }
    } else {
      out << "N," << summary_header << '\n';
      for (double v : sweep.values) {
        lans::SolverConfig run = cfg.solver;
        run.points = static_cast<int>(v);
        const spectral::Grid grid(run.dimension, run.points);
        const auto s = summarize(cfg.initial.build(grid, run.seed), run, cfg);
        out << run.points << ',';
        write_row(out, s.row);
        out << '\n';
      }
    }
  } catch (const lans::BlowUpError& e) {
    out.close();
    manifest.set("blow_up", {{"t", e.time()}, {"message", e.what()}});
    manifest.write(kExitBlowUp);
    log << "sweep: " << e.what() << '\n';
    return kExitBlowUp;
  }
  out.close();
  manifest.write(kExitOk);
  return kExitOk;
}

int cmd_lp_analyze(const CommandOptions& opts, std::ostream& log) {
  const Json doc = parse_json_file(opts.config);
  JsonReader root(doc, "");
  const std::string field_path = root.string("field", "");
  std::optional<spectral::SpectralField> field;
  std::string field_id;
  lans::SolverConfig solver;
  InitialData initial;
  if (!field_path.empty()) {
    fs::path p(field_path);
    if (p.is_relative()) p = opts.config.parent_path() / p;
    try {
      field = spectral::to_spectral(spectral::read_snapshot(p).field);
    } catch (const std::exception& e) {
      throw ConfigError("field: " + std::string(e.what()));
    }
    field_id = field_path;
  } else {
    auto sr = root.object("solver");
    solver = read_solver(sr);
    if (opts.seed) solver.seed = *opts.seed;
    auto ir = root.object("initial");
    initial = read_initial(ir);
    field = initial.build({solver.dimension, solver.points}, solver.seed);
    field_id = "initial:" + initial.kind;
  }
  const int max_index = root.integer("max_index", -1);
  std::vector<lp::BesovIndex> indices;
  if (root.has("norms")) {
    const Json& list = root.raw("norms");
    if (!list.is_array()) throw ConfigError("norms: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      JsonReader nr(list[i], "norms[" + std::to_string(i) + "]");
      lp::BesovIndex idx{nr.number("s", 0.0), nr.exponent("p", 2.0), nr.exponent("q", 2.0)};
      nr.finish();
      if (!(idx.p >= 1.0 && idx.q >= 1.0)) throw ConfigError(nr.where() + ": p and q must be >= 1");
      indices.push_back(idx);
    }
  } else {
    indices.push_back({1.0, 2.0, 2.0});
  }
  root.finish();

  const Json& snapshot = doc;
  Manifest manifest("lp-analyze", opts, snapshot,
                    field_path.empty() ? std::optional<std::uint64_t>(solver.seed) : std::nullopt);
  const auto& grid = field->grid();
  const lp::DyadicFamily family = [&] {
    try {
      return max_index < 0 ? lp::DyadicFamily(grid) : lp::DyadicFamily(grid, max_index);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("max_index: " + std::string(e.what()));
    }
  }();
  const int J = family.max_index();

  {
    auto out = open_output(manifest.output("dyadic_tables.csv"));
    out << "k2,radius,low";
    for (int j = 0; j <= J; ++j) out << ",psi_" << j;
    out << ",sum\n" << std::setprecision(17);
    const auto& lat = grid.lattice();
    const auto sum = family.partition_sum();
    std::map<int, std::size_t> first;
    for (std::size_t i = 0; i < lat.k2.size(); ++i) first.emplace(lat.k2[i], i);
    for (const auto& [k2, i] : first) {
      out << k2 << ',' << lat.radius[i];
      for (int b = -1; b <= J; ++b) out << ',' << family.symbol(b)[i];
      out << ',' << sum[i] << '\n';
    }
  }
  Json records = Json::array();
  for (const auto& idx : indices) records.push_back(lp::besov_record(family, *field, idx, field_id).to_json());
  const auto blocks = lp::block_norms(family, *field, 2.0);
  write_json(manifest.output("besov.json"), {{"field", field_id},
                                             {"dimension", grid.dimension()},
                                             {"points", grid.points()},
                                             {"J", J},
                                             {"block_l2_norms", blocks},
                                             {"unresolved_fraction", lp::unresolved_fraction(family, *field)},
                                             {"norms", records}});
  log << "lp-analyze: J=" << J << ", " << indices.size() << " norm(s)\n";
  manifest.write(kExitOk);
  return kExitOk;
}

int run_command(const std::string& name, const CommandOptions& opts, std::ostream& log, std::ostream& err) {
  static const std::map<std::string, int (*)(const CommandOptions&, std::ostream&)> commands = {
      {"solve", cmd_solve}, {"picard", cmd_picard}, {"verify", cmd_verify},
      {"sweep", cmd_sweep}, {"lp-analyze", cmd_lp_analyze}};
  const auto it = commands.find(name);
  if (it == commands.end()) {
    err << "error: unknown command '" << name << "'\n";
    return kExitConfig;
  }
  try {
    return it->second(opts, log);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

std::optional<int> resolve_threads(std::optional<int> flag) {
  if (flag) {
    if (*flag < 1) throw ConfigError("--threads must be a positive integer");
    return flag;
  }
  const char* env = std::getenv("LANS_LAB_THREADS");
  if (env == nullptr || *env == '\0') return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 4096) throw ConfigError("LANS_LAB_THREADS must be a positive integer");
  return static_cast<int>(v);
}

}  // namespace lanslab::cli
