#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lanslab/cli/config.hpp"

namespace lanslab::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitConfig = 2,
  kExitBlowUp = 3,
  kExitNotConverged = 4,
  kExitCheckFailed = 5,
};

inline constexpr const char* kArtifactVersion = "lanslab 0.1.0";

struct CommandOptions {
  std::filesystem::path config;
  std::filesystem::path out = "out";
  std::optional<std::uint64_t> seed;
};

/// Lists every file a command wrote (paths relative to the output directory).
/// Everything except the "timing" entry is a function of the inputs.
class Manifest {
 public:
  /// `seed` is the seed the run actually used, if any.
  Manifest(std::string command, const CommandOptions& opts, Json config,
           std::optional<std::uint64_t> seed = std::nullopt);
  /// Records a relative path and returns the absolute one to write to.
  std::filesystem::path output(const std::string& relative);
  void set(const std::string& key, Json value) { extra_[key] = std::move(value); }
  /// Writes manifest.json with the elapsed seconds since construction.
  void write(int exit_code);

 private:
  std::string command_;
  std::filesystem::path dir_;
  Json config_;
  std::optional<std::uint64_t> seed_;
  std::vector<std::string> outputs_;
  Json extra_ = Json::object();
  double start_;
};

int cmd_solve(const CommandOptions& opts, std::ostream& log);
int cmd_picard(const CommandOptions& opts, std::ostream& log);
int cmd_verify(const CommandOptions& opts, std::ostream& log);
int cmd_sweep(const CommandOptions& opts, std::ostream& log);
int cmd_lp_analyze(const CommandOptions& opts, std::ostream& log);

/// Dispatches by name and maps exceptions to exit codes: ConfigError and
/// ParameterError give 2, anything else 1 (with the message on `err`).
int run_command(const std::string& name, const CommandOptions& opts, std::ostream& log, std::ostream& err);

/// --threads when given, else LANS_LAB_THREADS, else nullopt. Throws
/// ConfigError on values that are not positive integers.
std::optional<int> resolve_threads(std::optional<int> flag);

}  // namespace lanslab::cli
