#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lanslab/lans/config.hpp"
#include "lanslab/lans/existence.hpp"
#include "lanslab/lans/picard.hpp"

namespace lanslab::cli {

using Json = nlohmann::ordered_json;

/// Malformed or invalid configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses JSON text; syntax errors report "<source>:<line>:<column>: ...".
Json parse_json_text(const std::string& text, const std::string& source);
Json parse_json_file(const std::filesystem::path& path);

/// Typed access to a JSON object that remembers which keys were read, so
/// misspelled keys can be reported instead of silently ignored.
class JsonReader {
 public:
  JsonReader(const Json& object, std::string where);

  bool has(const std::string& key) const { return object_->contains(key); }
  double number(const std::string& key, double fallback);
  double number(const std::string& key);
  /// A number, or the string "inf".
  double exponent(const std::string& key, double fallback);
  int integer(const std::string& key, int fallback);
  std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback);
  bool boolean(const std::string& key, bool fallback);
  std::string string(const std::string& key, const std::string& fallback);
  std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback);
  /// Sub-object, or an empty object when absent.
  JsonReader object(const std::string& key);
  const Json& raw(const std::string& key);
  /// Throws ConfigError naming any key that was never read.
  void finish() const;

  const std::string& where() const { return where_; }

 private:
  const Json& at(const std::string& key);
  std::string path(const std::string& key) const { return where_.empty() ? key : where_ + "." + key; }

  const Json* object_;
  std::string where_;
  std::set<std::string> used_;
};

/// Initial velocity field.
struct InitialData {
  /// taylor_green | shear | zero | random
  std::string kind = "taylor_green";
  double amplitude = 0.1;
  /// random only: spectrum radius and decay; the seed comes from the solver.
  double radius = 4.0;
  double decay = 2.0;

  spectral::SpectralField build(const spectral::Grid& grid, std::uint64_t seed) const;
  Json to_json() const;
};

struct SweepSpec {
  /// alpha | amplitude | N
  std::string axis;
  std::vector<double> values;
  lans::ExistenceOptions existence;
};

/// Everything a solve, picard or sweep run reads from its config file.
struct RunConfig {
  lans::SolverConfig solver;
  InitialData initial;
  /// Besov index r (and q) of the diagnostics column besov_r.
  double diag_r = 2.5;
  double diag_q = 2.0;
  lans::PicardIndices picard;
  std::optional<double> picard_radius;
  std::vector<double> snapshot_times;
  std::optional<SweepSpec> sweep;

  Json to_json() const;
};

lans::SolverConfig read_solver(JsonReader& reader);
Json solver_to_json(const lans::SolverConfig& cfg);
InitialData read_initial(JsonReader& reader);

/// Validates every section; errors are ConfigError with the offending key.
RunConfig parse_run_config(const Json& doc);
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace lanslab::cli
