#include "lanslab/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lanslab/lans/initial_data.hpp"

namespace lanslab::cli {

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (auto pos = what.find(": "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ConfigError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what);
  }
}

Json parse_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_json_text(text.str(), path.string());
}

JsonReader::JsonReader(const Json& object, std::string where) : object_(&object), where_(std::move(where)) {
  if (!object.is_object()) throw ConfigError((where_.empty() ? "config" : where_) + ": expected a JSON object");
}

const Json& JsonReader::at(const std::string& key) {
  used_.insert(key);
  return object_->at(key);
}

const Json& JsonReader::raw(const std::string& key) {
  if (!has(key)) throw ConfigError(path(key) + ": missing");
  return at(key);
}

double JsonReader::number(const std::string& key) {
  const Json& v = raw(key);
  if (!v.is_number()) throw ConfigError(path(key) + ": expected a number");
  return v.get<double>();
}

double JsonReader::number(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

double JsonReader::exponent(const std::string& key, double fallback) {
  if (!has(key)) return fallback;
  const Json& v = at(key);
  if (v.is_string() && v.get<std::string>() == "inf") return INFINITY;
  if (!v.is_number()) throw ConfigError(path(key) + ": expected a number or \"inf\"");
  return v.get<double>();
}

int JsonReader::integer(const std::string& key, int fallback) {
  if (!has(key)) return fallback;
  const Json& v = at(key);
  if (!v.is_number_integer()) throw ConfigError(path(key) + ": expected an integer");
  return v.get<int>();
}

std::uint64_t JsonReader::unsigned_integer(const std::string& key, std::uint64_t fallback) {
  if (!has(key)) return fallback;
  const Json& v = at(key);
  if (!v.is_number_unsigned()) throw ConfigError(path(key) + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

bool JsonReader::boolean(const std::string& key, bool fallback) {
  if (!has(key)) return fallback;
  const Json& v = at(key);
  if (!v.is_boolean()) throw ConfigError(path(key) + ": expected true or false");
  return v.get<bool>();
}

std::string JsonReader::string(const std::string& key, const std::string& fallback) {
  if (!has(key)) return fallback;
  const Json& v = at(key);
  if (!v.is_string()) throw ConfigError(path(key) + ": expected a string");
  return v.get<std::string>();
}

std::vector<double> JsonReader::numbers(const std::string& key, const std::vector<double>& fallback) {
  if (!has(key)) return fallback;
  const Json& v = at(key);
  if (!v.is_array()) throw ConfigError(path(key) + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError(path(key) + ": expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

JsonReader JsonReader::object(const std::string& key) {
  static const Json empty = Json::object();
  if (!has(key)) return JsonReader(empty, path(key));
  return JsonReader(at(key), path(key));
}

void JsonReader::finish() const {
  std::vector<std::string> unknown;
  for (const auto& item : object_->items()) {
    if (!used_.count(item.key())) unknown.push_back(path(item.key()));
  }
  if (unknown.empty()) return;
  std::string msg = "unknown key";
  msg += unknown.size() > 1 ? "s: " : ": ";
  for (std::size_t i = 0; i < unknown.size(); ++i) msg += (i ? ", " : "") + unknown[i];
  throw ConfigError(msg);
}

spectral::SpectralField InitialData::build(const spectral::Grid& grid, std::uint64_t seed) const {
  if (kind == "taylor_green") return lans::taylor_green(grid, amplitude);
  if (kind == "shear") return lans::shear_flow(grid, amplitude);
  if (kind == "zero") return lans::zero_velocity(grid);
  if (kind == "random") return lans::random_solenoidal(seed, grid, amplitude, radius, decay);
  throw ConfigError("initial.kind: unknown kind '" + kind + "'");
}

Json InitialData::to_json() const {
  Json out = {{"kind", kind}, {"amplitude", amplitude}};
  if (kind == "random") {
    out["radius"] = radius;
    out["decay"] = decay;
  }
  return out;
}

lans::SolverConfig read_solver(JsonReader& r) {
  lans::SolverConfig c;
  c.alpha = r.number("alpha", c.alpha);
  c.nu = r.number("nu", c.nu);
  c.dimension = r.integer("dimension", c.dimension);
  c.points = r.integer("points", c.points);
  c.dt = r.number("dt", c.dt);
  c.horizon = r.number("horizon", c.horizon);
  c.picard_tol = r.number("picard_tol", c.picard_tol);
  c.picard_max_iter = r.integer("picard_max_iter", c.picard_max_iter);
  c.quadrature_nodes = r.integer("quadrature_nodes", c.quadrature_nodes);
  c.picard_intervals = r.integer("picard_intervals", c.picard_intervals);
  c.sample_stride = r.integer("sample_stride", c.sample_stride);
  c.blowup_threshold = r.number("blowup_threshold", c.blowup_threshold);
  c.seed = r.unsigned_integer("seed", c.seed);
  r.finish();
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(r.where() + ": " + e.what());
  }
  if (c.points < 8 || c.points % 2 != 0) throw ConfigError(r.where() + ": points must be even and >= 8");
  return c;
}

Json solver_to_json(const lans::SolverConfig& c) {
  return {{"alpha", c.alpha},
          {"nu", c.nu},
          {"dimension", c.dimension},
          {"points", c.points},
          {"dt", c.dt},
          {"horizon", c.horizon},
          {"picard_tol", c.picard_tol},
          {"picard_max_iter", c.picard_max_iter},
          {"quadrature_nodes", c.quadrature_nodes},
          {"picard_intervals", c.picard_intervals},
          {"sample_stride", c.sample_stride},
          {"blowup_threshold", c.blowup_threshold},
          {"seed", c.seed}};
}

InitialData read_initial(JsonReader& r) {
  InitialData d;
  d.kind = r.string("kind", d.kind);
  d.amplitude = r.number("amplitude", d.amplitude);
  d.radius = r.number("radius", d.radius);
  d.decay = r.number("decay", d.decay);
  r.finish();
  if (d.kind != "taylor_green" && d.kind != "shear" && d.kind != "zero" && d.kind != "random") {
    throw ConfigError(r.where() + ".kind: expected taylor_green, shear, zero or random");
  }
  if (!std::isfinite(d.amplitude)) throw ConfigError(r.where() + ".amplitude: must be finite");
  if (d.kind == "random" && !(d.radius > 0.5)) throw ConfigError(r.where() + ".radius: must exceed 0.5");
  return d;
}

namespace {

lans::PicardIndices read_picard(JsonReader& r, std::optional<double>& radius) {
  lans::PicardIndices idx;
  idx.r = r.number("r", idx.r);
  idx.p = r.exponent("p", idx.p);
  idx.q = r.exponent("q", idx.q);
  idx.s = r.number("s", idx.s);
  idx.p_tilde = r.exponent("p_tilde", idx.p_tilde);
  if (r.has("radius")) radius = r.number("radius");
  r.finish();
  if (radius && !(*radius > 0.0)) throw ConfigError(r.where() + ".radius: must be > 0");
  return idx;
}

SweepSpec read_sweep(JsonReader& r) {
  SweepSpec s;
  s.axis = r.string("axis", "");
  s.values = r.numbers("values", {});
  s.existence.t_cap = r.number("t_cap", s.existence.t_cap);
  s.existence.bisection_steps = r.integer("bisection_steps", s.existence.bisection_steps);
  r.finish();
  if (s.axis != "alpha" && s.axis != "amplitude" && s.axis != "N") {
    throw ConfigError(r.where() + ".axis: expected alpha, amplitude or N");
  }
  if (s.values.empty()) throw ConfigError(r.where() + ".values: must not be empty");
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    if (!std::isfinite(s.values[i])) throw ConfigError(r.where() + ".values: must be finite");
    if (i > 0 && !(s.values[i] > s.values[i - 1])) {
      throw ConfigError(r.where() + ".values: must be strictly increasing");
    }
  }
  if (s.axis == "alpha" && s.values.front() < 0.0) throw ConfigError(r.where() + ".values: alpha must be >= 0");
  if (s.axis == "N") {
    for (double v : s.values) {
      if (v != std::floor(v) || v < 8 || static_cast<long>(v) % 2 != 0) {
        throw ConfigError(r.where() + ".values: N must be even integers >= 8");
      }
    }
  }
  if (!(s.existence.t_cap > 0.0) || s.existence.bisection_steps < 1) {
    throw ConfigError(r.where() + ": t_cap must be > 0 and bisection_steps >= 1");
  }
  return s;
}

}  // namespace

RunConfig parse_run_config(const Json& doc) {
  JsonReader root(doc, "");
  RunConfig cfg;
  auto solver = root.object("solver");
  cfg.solver = read_solver(solver);
  auto initial = root.object("initial");
  cfg.initial = read_initial(initial);
  auto diag = root.object("diagnostics");
  cfg.diag_r = diag.number("r", cfg.diag_r);
  cfg.diag_q = diag.exponent("q", cfg.diag_q);
  diag.finish();
  if (!(cfg.diag_q >= 1.0)) throw ConfigError("diagnostics.q: must be >= 1");
  auto picard = root.object("picard");
  cfg.picard = read_picard(picard, cfg.picard_radius);
  cfg.snapshot_times = root.numbers("snapshots", {});
  for (double t : cfg.snapshot_times) {
    if (!(t >= 0.0 && t <= cfg.solver.horizon)) throw ConfigError("snapshots: times must lie in [0, horizon]");
  }
  if (root.has("sweep")) {
    auto sweep = root.object("sweep");
    cfg.sweep = read_sweep(sweep);
  }
  root.finish();
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  const Json doc = parse_json_file(path);
  try {
    return parse_run_config(doc);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

namespace {

Json exponent_json(double v) { return std::isinf(v) ? Json("inf") : Json(v); }

}  // namespace

Json RunConfig::to_json() const {
  Json out = {{"solver", solver_to_json(solver)},
              {"initial", initial.to_json()},
              {"diagnostics", {{"r", diag_r}, {"q", exponent_json(diag_q)}}},
              {"picard", {{"r", picard.r}, {"p", exponent_json(picard.p)}, {"q", exponent_json(picard.q)},
                          {"s", picard.s}, {"p_tilde", exponent_json(picard.p_tilde)}}},
              {"snapshots", snapshot_times}};
  if (picard_radius) out["picard"]["radius"] = *picard_radius;
  if (sweep) {
    out["sweep"] = {{"axis", sweep->axis},
                    {"values", sweep->values},
                    {"t_cap", sweep->existence.t_cap},
                    {"bisection_steps", sweep->existence.bisection_steps}};
  }
  return out;
}

}  // namespace lanslab::cli
