#include "lanslab/lab/checks_dynamic.hpp"

#include <algorithm>
#include <cmath>

#include "lanslab/errors.hpp"

namespace lanslab::lab {
namespace {

double step_ratio(double e0, double e1, double h) {
  if (e0 == 0.0) return e1 <= 0.0 ? 0.0 : INFINITY;
  return (e1 - e0) / (e0 * std::pow(h, 4));
}

}  // namespace

void require_gronwall_indices(double r, double q) {
  ConditionList gate("a priori estimate indices");
  gate.require(r > 2.0, "r > 2");
  gate.require(q >= 1.0 && std::isfinite(q), "1 <= q < inf");
  gate.throw_if_any();
}

void EnergySeries::add(double time, const SpectralField& u) {
  const lp::DyadicFamily family(u.grid(), 0);
  t.push_back(time);
  energy.push_back(lans::lans_energy(u, alpha));
  low_l2.push_back(spectral::l2_norm(lp::low_pass(family, u)));
  h1.push_back(lp::h1_norm(u));
}

EnergySeries EnergySeries::of(const Trajectory& traj, double alpha) {
  EnergySeries out;
  out.alpha = alpha;
  for (std::size_t i = 0; i < traj.size(); ++i) out.add(traj[i].t, traj[i].u);
  return out;
}

CheckReport check_energy_monotone(const EnergySeries& series, double tolerance_constant) {
  CheckReport rep;
  rep.check_id = "energy_monotone";
  rep.parameters = {{"alpha", series.alpha}, {"tolerance_constant", tolerance_constant}};
  rep.ensemble_size = 1;
  int violations = 0;
  double worst_increase = 0.0;
  for (std::size_t i = 0; i + 1 < series.t.size(); ++i) {
    const double r = step_ratio(series.energy[i], series.energy[i + 1], series.t[i + 1] - series.t[i]);
    rep.ratios.push_back(r);
    if (r > tolerance_constant) ++violations;
    if (series.energy[i] > 0.0) {
      worst_increase = std::max(worst_increase, (series.energy[i + 1] - series.energy[i]) / series.energy[i]);
    }
  }
  double low_margin = INFINITY;
  bool low_ok = true;
  for (std::size_t i = 0; i < series.t.size(); ++i) {
    low_ok = low_ok && series.low_l2[i] <= series.h1[i];
    low_margin = std::min(low_margin, series.h1[i] - series.low_l2[i]);
  }
  rep.finalize_max();
  rep.criterion = "E(t_{i+1}) <= E(t_i) + C h^4 E(t_i) at every step; ||Psi*u||_2 <= ||u||_{H^{1,2}}";
  rep.details = {{"steps", rep.ratios.size()},
                 {"violations", violations},
                 {"largest_relative_increase", worst_increase},
                 {"E_first", series.energy.empty() ? 0.0 : series.energy.front()},
                 {"E_last", series.energy.empty() ? 0.0 : series.energy.back()},
                 {"low_pass_bound_holds", low_ok},
                 {"smallest_low_pass_margin", number_json(low_margin)}};
  rep.set_pass(violations == 0 && low_ok);
  return rep;
}

namespace {

std::vector<double> implied_gronwall(const Trajectory& traj, const GronwallParams& params) {
  const lp::DyadicFamily family(traj.grid());
  const double n = traj.grid().dimension();
  const auto a = traj.besov_series(family, {params.r, 2.0, params.q}, false);
  const auto b = traj.besov_series(family, {1.0 + n / 2.0, 2.0, params.q}, false);
  const auto t = traj.times();
  std::vector<double> c;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    const double lhs = (std::pow(a[i + 1], params.q) - std::pow(a[i - 1], params.q)) / (t[i + 1] - t[i - 1]);
    const double rhs = b[i] * std::pow(a[i], params.q);
    const double top = std::max(lhs, 0.0);
    c.push_back(rhs == 0.0 ? (top == 0.0 ? 0.0 : INFINITY) : top / rhs);
  }
  return c;
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

}  // namespace

CheckReport check_gronwall_differential(const Trajectory& traj, const GronwallParams& params,
                                        const Trajectory* refined) {
  require_gronwall_indices(params.r, params.q);
  CheckReport rep;
  rep.check_id = "gronwall_differential";
  rep.parameters = {{"r", params.r}, {"q", params.q}, {"dimension", traj.grid().dimension()},
                    {"points", traj.grid().points()}, {"samples", traj.size()}};
  rep.ensemble_size = 1;
  rep.ratios = implied_gronwall(traj, params);
  rep.finalize_max();
  rep.criterion = "finite max implied C; under dt -> dt/2 it changes by less than the tolerance";
  bool stable = true;
  if (refined != nullptr) {
    const double fine = max_of(implied_gronwall(*refined, params));
    const double scale = std::max(rep.max_ratio, fine);
    const double change = scale == 0.0 ? 0.0 : std::abs(fine - rep.max_ratio) / scale;
    stable = change <= params.refinement_tolerance;
    rep.details = {{"refined_max_ratio", number_json(fine)},
                   {"relative_change", number_json(change)},
                   {"refinement_tolerance", params.refinement_tolerance}};
  }
  rep.set_pass(stable);
  return rep;
}

double AprioriProfile::sup() const {
  double m = -INFINITY;
  for (double c : c_impl) m = std::max(m, c);
  return m;
}

AprioriProfile apriori_profile(const Trajectory& traj, const AprioriParams& params) {
  require_gronwall_indices(params.r, params.q);
  const lp::DyadicFamily family(traj.grid());
  const double n = traj.grid().dimension();
  const auto norm_r = traj.besov_series(family, {params.r, 2.0, params.q});
  const auto crit = traj.besov_series(family, {1.0 + n / 2.0, 2.0, params.q});
  const auto t = traj.times();
  AprioriProfile out;
  if (norm_r.front() == 0.0) {
    out.defined = false;
    return out;
  }
  const auto integral = cumulative_simpson(t, crit);
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(integral[i] > 0.0)) continue;
    out.t.push_back(t[i]);
    out.c_impl.push_back(std::log(norm_r[i] / norm_r.front()) / integral[i]);
  }
  return out;
}

CheckReport check_apriori_bound(const std::vector<Trajectory>& runs, const std::vector<double>& labels,
                                const AprioriParams& params) {
  require_gronwall_indices(params.r, params.q);
  CheckReport rep;
  rep.check_id = "apriori_bound";
  rep.parameters = {{"r", params.r}, {"q", params.q}, {"labels", labels}, {"spread_limit", params.spread_limit}};
  Json per_run = Json::array();
  double lo = INFINITY, hi = 0.0;
  int used = 0;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const auto profile = apriori_profile(runs[k], params);
    Json row = {{"label", k < labels.size() ? labels[k] : static_cast<double>(k)}};
    if (!profile.defined || profile.c_impl.empty()) {
      row["skipped"] = true;
      rep.ratios.push_back(NAN);
      per_run.push_back(row);
      continue;
    }
    const double sup = profile.sup();
    rep.ratios.push_back(sup);
    row["sup_c_impl"] = number_json(sup);
    per_run.push_back(row);
    lo = std::min(lo, std::abs(sup));
    hi = std::max(hi, std::abs(sup));
    ++used;
  }
  rep.ensemble_size = static_cast<int>(runs.size());
  rep.finalize_max();
  const double spread = used < 2 ? 1.0 : (lo == 0.0 ? (hi == 0.0 ? 1.0 : INFINITY) : hi / lo);
  rep.criterion = "sup_t C_impl finite for every run; max|sup| / min|sup| across runs <= spread_limit";
  rep.details = {{"runs", per_run}, {"spread", number_json(spread)}, {"runs_used", used}};
  bool finite = true;
  for (double r : rep.ratios) finite = finite && (std::isnan(r) || std::isfinite(r));
  rep.set_pass(finite && spread <= params.spread_limit);
  return rep;
}

}  // namespace lanslab::lab
