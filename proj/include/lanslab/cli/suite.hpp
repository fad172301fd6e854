#pragma once

#include <string>
#include <vector>

#include "lanslab/cli/config.hpp"
#include "lanslab/lab/report.hpp"

namespace lanslab::cli {

/// A suite file names check_ids and their parameters: {"checks": [{"id": .., "params": {..}}]}.
struct SuiteEntry {
  std::string id;
  Json params = Json::object();
  /// Also write the per-trial ratios as CSV.
  bool emit_ratios = false;
};

/// A check_id the suite runner does not know; maps to exit code 2.
class UnknownCheckError : public ConfigError {
 public:
  explicit UnknownCheckError(const std::string& id) : ConfigError("unknown check_id '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

const std::vector<std::string>& known_checks();

/// Throws UnknownCheckError for unknown ids and ConfigError for malformed entries.
std::vector<SuiteEntry> parse_suite(const Json& doc);

/// Runs one entry. Parameter-gate violations become a "rejected" report;
/// misspelled parameter keys throw ConfigError.
lab::CheckReport run_check(const SuiteEntry& entry);

}  // namespace lanslab::cli
