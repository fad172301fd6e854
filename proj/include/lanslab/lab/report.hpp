#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace lanslab::lab {

using Json = nlohmann::ordered_json;

/// Outcome of one verification check.
///
/// `ratios` holds one value per trial (or per sample for trajectory checks);
/// `max_ratio` is the empirical constant. `pass` is decided by the check and
/// always requires a finite max_ratio.
struct CheckReport {
  std::string check_id;
  Json parameters = Json::object();
  int ensemble_size = 0;
  std::vector<double> ratios;
  double max_ratio = 0.0;
  bool pass = false;
  /// "ok", "failed", or "rejected" (parameter gate).
  std::string status = "failed";
  std::string criterion;
  Json details = Json::object();

  /// Sets max_ratio from ratios (ignoring NaN placeholders of skipped trials).
  void finalize_max();
  void set_pass(bool ok);
  Json to_json() const;
};

/// Report for a tuple rejected by a check's admissibility gate.
CheckReport rejected_report(const std::string& check_id, const Json& parameters, const std::string& context,
                            const std::vector<std::string>& violations);

/// trial,ratio rows, 17 significant digits.
void write_ratios_csv(std::ostream& out, const CheckReport& report);

/// Seed of trial i in an ensemble drawn from `seed`.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

/// JSON number, or the strings "inf"/"nan" for non-finite values.
Json number_json(double v);

}  // namespace lanslab::lab
