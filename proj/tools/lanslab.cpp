#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "lanslab/cli/commands.hpp"
#include "lanslab/spectral/kernels.hpp"

int main(int argc, char** argv) {
  using namespace lanslab::cli;
  CLI::App app{"LANS-alpha numerical laboratory"};
  app.set_version_flag("--version", kArtifactVersion);
  app.require_subcommand(1);

  CommandOptions opts;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  const struct {
    const char* name;
    const char* help;
  } commands[] = {
      {"solve", "integrate a configured run and write its diagnostics"},
      {"picard", "run the Picard iteration of the Duhamel map"},
      {"verify", "run a suite of inequality checks"},
      {"sweep", "sweep alpha, amplitude or N"},
      {"lp-analyze", "dump Littlewood-Paley tables and Besov norms of a field"},
  };
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--config", opts.config, "JSON config (suite file for verify)")->required();
    sub->add_option("--out", opts.out, "output directory")->capture_default_str();
    sub->add_option("--seed", seed, "override the configured seed");
    sub->add_option("--threads", threads, "OpenMP threads (falls back to LANS_LAB_THREADS)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  opts.seed = seed;
  try {
    if (const auto n = resolve_threads(threads)) lanslab::kernels::set_thread_count(*n);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return run_command(app.get_subcommands().front()->get_name(), opts, std::cout, std::cerr);
}
