#include "lanslab/lab/report.hpp"

#include <cmath>
#include <iomanip>

namespace lanslab::lab {

void CheckReport::finalize_max() {
  bool any = false;
  double m = 0.0;
  for (double r : ratios) {
    if (std::isnan(r)) continue;
    m = any ? std::max(m, r) : r;
    any = true;
  }
  max_ratio = m;
}

void CheckReport::set_pass(bool ok) {
  pass = ok && std::isfinite(max_ratio);
  status = pass ? "ok" : "failed";
}

Json CheckReport::to_json() const {
  Json ratio_list = Json::array();
  for (double r : ratios) ratio_list.push_back(number_json(r));
  return {{"check_id", check_id},   {"status", status},         {"pass", pass},
          {"parameters", parameters}, {"ensemble_size", ensemble_size}, {"max_ratio", number_json(max_ratio)},
          {"criterion", criterion},   {"ratios", ratio_list},     {"details", details}};
}

CheckReport rejected_report(const std::string& check_id, const Json& parameters, const std::string& context,
                            const std::vector<std::string>& violations) {
  CheckReport r;
  r.check_id = check_id;
  r.parameters = parameters;
  r.status = "rejected";
  r.pass = false;
  r.criterion = "parameter gate";
  r.details = {{"error", "parameter_gate"}, {"context", context}, {"violations", violations}};
  return r;
}

void write_ratios_csv(std::ostream& out, const CheckReport& report) {
  out << "trial,ratio\n" << std::setprecision(17);
  for (std::size_t i = 0; i < report.ratios.size(); ++i) out << i << ',' << report.ratios[i] << '\n';
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  // splitmix64 finalizer over (seed, trial)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Json number_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace lanslab::lab
