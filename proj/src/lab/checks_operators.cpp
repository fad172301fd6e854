#include "lanslab/lab/checks_operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lanslab/errors.hpp"
#include "lanslab/lans/nonlinear.hpp"
#include "lanslab/lans/semigroup.hpp"
#include "lanslab/lp/norms.hpp"

namespace lanslab::lab {
namespace {

using lans::Trajectory;

Trajectory semigroup_trajectory(const SpectralField& u0, const OperatorSetup& setup) {
  Trajectory traj(Trajectory::Kind::forcing);
  for (double t : setup.times()) traj.push(t, lans::semigroup_apply(u0, t, setup.nu));
  return traj;
}

std::vector<double> besov_of(const lp::DyadicFamily& family, const std::vector<SpectralField>& v,
                             const BesovIndex& idx) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& f : v) out.push_back(lp::besov_norm(family, f, idx));
  return out;
}

// sup_t t^a x(t); t = 0 is skipped unless a = 0.
double weighted_sup(const std::vector<double>& x, const std::vector<double>& t, double a) {
  double out = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (a != 0.0 && t[i] <= 0.0) continue;
    out = std::max(out, (a != 0.0 ? std::pow(t[i], a) : 1.0) * x[i]);
  }
  return out;
}

double lsigma(const std::vector<double>& x, const std::vector<double>& t, double sigma) {
  std::vector<double> powered(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) powered[i] = std::pow(x[i], sigma);
  return std::pow(std::max(0.0, simpson(t, powered)), 1.0 / sigma);
}

double ratio(double num, double den) {
  if (den == 0.0) return num == 0.0 ? NAN : INFINITY;
  return num / den;
}

void require_mapping(ConditionList& gate, const MappingIndices& idx) {
  gate.require(idx.s0 <= idx.s1, "s0 <= s1");
  gate.require(idx.p0 >= 1.0 && idx.p0 <= idx.p1 && std::isfinite(idx.p1), "1 <= p0 <= p1 < inf");
  gate.require(idx.q >= 1.0, "1 <= q <= inf");
}

std::vector<SpectralField> duhamel_of(const Trajectory& g, const OperatorSetup& setup) {
  return lans::duhamel_series(g, setup.nu);
}

// G.(Gamma u0)(t) = t Gamma u0(t); relative L^2 error of the quadrature at the last sample.
double duhamel_oracle_error(const SpectralField& u0, const std::vector<SpectralField>& gg,
                            const OperatorSetup& setup) {
  const auto exact = setup.horizon * lans::semigroup_apply(u0, setup.horizon, setup.nu);
  return spectral::l2_norm(gg.back() - exact) / spectral::l2_norm(exact);
}

CheckReport finish(CheckReport rep, const std::string& id, const OperatorSetup& setup, Json params,
                   const std::string& criterion) {
  rep.check_id = id;
  params["setup"] = setup.to_json();
  rep.parameters = std::move(params);
  rep.ensemble_size = setup.ensemble.size;
  rep.finalize_max();
  rep.criterion = criterion;
  rep.set_pass(true);
  return rep;
}

}  // namespace

std::vector<double> OperatorSetup::times() const {
  if (time_points < 5 || !(t_min > 0.0 && t_min < horizon / ((time_points - 1) / 2))) {
    throw std::invalid_argument("operator setup needs time_points >= 5 and t_min below the uniform spacing");
  }
  // Log-spaced up to the uniform spacing h, then uniform steps of h.
  const int n_uniform = (time_points - 1) / 2;
  const int n_log = time_points - 1 - n_uniform;
  const double h = horizon / n_uniform;
  std::vector<double> t{0.0};
  for (int i = 0; i < n_log; ++i) t.push_back(t_min * std::pow(h / t_min, static_cast<double>(i) / n_log));
  for (int i = 1; i <= n_uniform; ++i) t.push_back(i == n_uniform ? horizon : i * h);
  return t;
}

Json OperatorSetup::to_json() const {
  return {{"ensemble", ensemble.to_json()}, {"horizon", horizon}, {"t_min", t_min},
          {"time_points", time_points},     {"nu", nu}};
}

Json MappingIndices::to_json() const {
  return {{"s0", s0}, {"p0", number_json(p0)}, {"s1", s1}, {"p1", number_json(p1)}, {"q", number_json(q)}};
}

Json NonlinearIndices::to_json() const {
  return {{"r", r}, {"p", number_json(p)}, {"p_bar", number_json(p_bar)}, {"q", number_json(q)},
          {"alpha", alpha}, {"exponent", exponent}};
}

CheckReport check_semigroup_weighted_mapping(const OperatorSetup& setup, const MappingIndices& idx) {
  const int n = setup.ensemble.dimension;
  ConditionList gate("semigroup mapping indices");
  require_mapping(gate, idx);
  gate.throw_if_any();
  const double sigma = idx.sigma(n);
  const lp::DyadicFamily family(setup.ensemble.grid());
  CheckReport rep;
  for (const auto& u0 : make_ensemble(setup.ensemble)) {
    const auto traj = semigroup_trajectory(u0, setup);
    const double num = ct_norm(traj, family, sigma / 2.0, {idx.s1, idx.p1, idx.q});
    rep.ratios.push_back(ratio(num, lp::besov_norm(family, u0, {idx.s0, idx.p0, idx.q})));
  }
  Json params = idx.to_json();
  params["sigma"] = sigma;
  return finish(std::move(rep), "semigroup_weighted_mapping", setup, params,
                "finite sup_t t^{sigma/2} ||Gamma u0||_{B^{s1}_{p1,q}} / ||u0||_{B^{s0}_{p0,q}}");
}

CheckReport check_semigroup_time_integrability(const OperatorSetup& setup, const MappingIndices& idx) {
  const int n = setup.ensemble.dimension;
  const double gap = idx.sigma(n);
  ConditionList gate("semigroup integrability indices");
  require_mapping(gate, idx);
  gate.require(idx.p0 > 1.0, "1 < p0");
  gate.require(std::isfinite(idx.q), "q < inf");
  gate.require(gap > 0.0, "0 < (s1 - s0 + n/p0 - n/p1)/2 = 1/sigma");
  gate.require(gap <= 2.0, "sigma >= 1");
  gate.throw_if_any();
  const double sigma = 2.0 / gap;
  const lp::DyadicFamily family(setup.ensemble.grid());
  CheckReport rep;
  for (const auto& u0 : make_ensemble(setup.ensemble)) {
    const auto traj = semigroup_trajectory(u0, setup);
    const double num = lsigma_norm(traj, family, sigma, {idx.s1, idx.p1, idx.q});
    rep.ratios.push_back(ratio(num, lp::besov_norm(family, u0, {idx.s0, idx.p0, idx.q})));
  }
  Json params = idx.to_json();
  params["sigma"] = sigma;
  return finish(std::move(rep), "semigroup_time_integrability", setup, params,
                "finite ||Gamma u0||_{L^sigma(0,T; B^{s1}_{p1,q})} / ||u0||_{B^{s0}_{p0,q}}");
}

CheckReport check_duhamel_weighted_mapping(const OperatorSetup& setup, const MappingIndices& idx, double k0) {
  const int n = setup.ensemble.dimension;
  const double sigma = idx.sigma(n);
  ConditionList gate("Duhamel weighted mapping indices");
  require_mapping(gate, idx);
  gate.require(sigma > 0.0 && sigma < 2.0, "0 < sigma/2 < 1");
  gate.require(k0 >= 0.0 && k0 < 1.0, "0 <= k0 < 1");
  gate.throw_if_any();
  const double k1 = k0 + sigma / 2.0 - 1.0;
  const lp::DyadicFamily family(setup.ensemble.grid());
  const auto t = setup.times();
  CheckReport rep;
  double oracle = 0.0;
  for (const auto& u0 : make_ensemble(setup.ensemble)) {
    const auto g = semigroup_trajectory(u0, setup);
    const auto gg = duhamel_of(g, setup);
    oracle = std::max(oracle, duhamel_oracle_error(u0, gg, setup));
    const double num = weighted_sup(besov_of(family, gg, {idx.s1, idx.p1, idx.q}), t, k1);
    const double den = weighted_sup(g.besov_series(family, {idx.s0, idx.p0, idx.q}), t, k0);
    rep.ratios.push_back(ratio(num, den));
  }
  Json params = idx.to_json();
  params["sigma"] = sigma;
  params["k0"] = k0;
  params["k1"] = k1;
  rep.details["duhamel_quadrature_error"] = oracle;
  return finish(std::move(rep), "duhamel_weighted_mapping", setup, params,
                "finite ||G.g||_{k1; s1,p1,q} / ||g||_{k0; s0,p0,q}, k1 = k0 + sigma/2 - 1");
}

CheckReport check_duhamel_integral_mapping(const OperatorSetup& setup, const MappingIndices& idx, double sigma0) {
  const int n = setup.ensemble.dimension;
  const double gap = 1.0 - idx.sigma(n) / 2.0;
  ConditionList gate("Duhamel integral mapping indices");
  require_mapping(gate, idx);
  gate.require(std::isfinite(idx.q), "q < inf");
  gate.require(sigma0 > 1.0, "1 < sigma0");
  const double inv1 = 1.0 / sigma0 - gap;
  gate.require(inv1 > 0.0 && inv1 < 1.0 / sigma0, "sigma0 < sigma1 < inf with 1/sigma0 - 1/sigma1 = 1 - sigma/2");
  gate.throw_if_any();
  const double sigma1 = 1.0 / inv1;
  const lp::DyadicFamily family(setup.ensemble.grid());
  const auto t = setup.times();
  CheckReport rep;
  for (const auto& u0 : make_ensemble(setup.ensemble)) {
    const auto g = semigroup_trajectory(u0, setup);
    const auto gg = duhamel_of(g, setup);
    const double num = lsigma(besov_of(family, gg, {idx.s1, idx.p1, idx.q}), t, sigma1);
    const double den = lsigma_norm(g, family, sigma0, {idx.s0, idx.p0, idx.q});
    rep.ratios.push_back(ratio(num, den));
  }
  Json params = idx.to_json();
  params["sigma0"] = sigma0;
  params["sigma1"] = sigma1;
  return finish(std::move(rep), "duhamel_integral_mapping", setup, params,
                "finite ||G.g||_{L^{sigma1}(B^{s1}_{p1,q})} / ||g||_{L^{sigma0}(B^{s0}_{p0,q})}");
}

CheckReport check_duhamel_continuity(const OperatorSetup& setup, const MappingIndices& idx) {
  const int n = setup.ensemble.dimension;
  const double inv_sigma = 1.0 - idx.sigma(n) / 2.0;
  ConditionList gate("Duhamel continuity indices");
  require_mapping(gate, idx);
  gate.require(idx.p0 > 1.0, "1 < p0");
  gate.require(std::isfinite(idx.q), "q < inf");
  gate.require(inv_sigma > 0.0 && inv_sigma <= 1.0, "1/sigma = 1 - (s1 - s0 + n/p0 - n/p1)/2 in (0, 1]");
  gate.require(1.0 / idx.p1 <= inv_sigma, "1/p1 <= 1/sigma");
  gate.throw_if_any();
  const double sigma = 1.0 / inv_sigma;
  const lp::DyadicFamily family(setup.ensemble.grid());
  const auto t = setup.times();
  CheckReport rep;
  for (const auto& u0 : make_ensemble(setup.ensemble)) {
    const auto g = semigroup_trajectory(u0, setup);
    const auto gg = duhamel_of(g, setup);
    const double num = weighted_sup(besov_of(family, gg, {idx.s1, idx.p1, idx.q}), t, 0.0);
    rep.ratios.push_back(ratio(num, lsigma_norm(g, family, sigma, {idx.s0, idx.p0, idx.q})));
  }
  Json params = idx.to_json();
  params["sigma"] = sigma;
  return finish(std::move(rep), "duhamel_continuity", setup, params,
                "finite sup_t ||G.g(t)||_{B^{s1}_{p1,q}} / ||g||_{L^sigma(B^{s0}_{p0,q})}");
}

namespace {

void require_nonlinear(ConditionList& gate, const NonlinearIndices& idx, int n) {
  const double s_bar = n * (2.0 / idx.p - 1.0 / idx.p_bar);
  gate.require(idx.r > 1.0, "r > 1");
  gate.require(idx.p > 1.0 && std::isfinite(idx.p), "p in (1, inf)");
  gate.require(idx.p_bar > 1.0 && std::isfinite(idx.p_bar), "p_bar in (1, inf)");
  gate.require(idx.p <= 2.0 * idx.p_bar, "p <= 2 p_bar");
  gate.require(s_bar >= 0.0 && s_bar < idx.r - 1.0, "0 <= s_bar = n(2/p - 1/p_bar) < r - 1");
  gate.require(idx.q >= 1.0 && std::isfinite(idx.q), "1 <= q < inf");
  gate.require(idx.alpha >= 0.0, "alpha >= 0");
}

struct NonlinearPair {
  Trajectory u, v;
  std::vector<SpectralField> v_diff;  // V(u(t)) - V(v(t))
};

NonlinearPair nonlinear_pair(const SpectralField& u0, const SpectralField& v0, const OperatorSetup& setup,
                             double alpha) {
  NonlinearPair out{semigroup_trajectory(u0, setup), semigroup_trajectory(v0, setup), {}};
  for (std::size_t i = 0; i < out.u.size(); ++i) {
    out.v_diff.push_back(lans::nonlinearity_V(out.u[i].u, alpha) - lans::nonlinearity_V(out.v[i].u, alpha));
  }
  return out;
}

std::vector<double> series_of(const lp::DyadicFamily& family, const Trajectory& a, const Trajectory& b, double sign,
                              const BesovIndex& idx) {
  std::vector<double> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    SpectralField w = a[i].u;
    w.add_scaled(sign, b[i].u);
    out.push_back(lp::besov_norm(family, w, idx));
  }
  return out;
}

EnsembleSpec solenoidal(EnsembleSpec spec) {
  spec.components = 0;
  spec.divergence_free = true;
  return spec;
}

}  // namespace

CheckReport check_nonlinearity_weighted_mapping(const OperatorSetup& setup, const NonlinearIndices& idx) {
  const int n = setup.ensemble.dimension;
  ConditionList gate("nonlinearity mapping indices");
  require_nonlinear(gate, idx, n);
  gate.require(idx.exponent >= 0.0 && idx.exponent < 1.0, "0 <= a < 1");
  gate.throw_if_any();
  const double a = idx.exponent;
  const EnsembleSpec spec = solenoidal(setup.ensemble);
  const lp::DyadicFamily family(spec.grid());
  const auto t = setup.times();
  const auto us = make_ensemble(spec);
  const auto vs = make_ensemble(spec, spec.size);
  const BesovIndex sol{idx.r, idx.p, idx.q};
  CheckReport rep;
  for (std::size_t k = 0; k < us.size(); ++k) {
    const auto pair = nonlinear_pair(us[k], vs[k], setup, idx.alpha);
    const double num = weighted_sup(besov_of(family, pair.v_diff, {idx.r - 1.0, idx.p_bar, idx.q}), t, a);
    const double den = (weighted_sup(pair.u.besov_series(family, sol), t, a / 2.0) +
                        weighted_sup(pair.v.besov_series(family, sol), t, a / 2.0)) *
                       weighted_sup(series_of(family, pair.u, pair.v, -1.0, sol), t, a / 2.0);
    rep.ratios.push_back(ratio(num, den));
  }
  Json params = idx.to_json();
  params["s_bar"] = n * (2.0 / idx.p - 1.0 / idx.p_bar);
  return finish(std::move(rep), "nonlinearity_weighted_mapping", setup, params,
                "finite ||V(u) - V(v)||_{a; r-1,p_bar,q} / ((||u|| + ||v||)_{a/2; r,p,q} ||u - v||_{a/2; r,p,q})");
}

CheckReport check_nonlinearity_time_integrability(const OperatorSetup& setup, const NonlinearIndices& idx) {
  const int n = setup.ensemble.dimension;
  ConditionList gate("nonlinearity integrability indices");
  require_nonlinear(gate, idx, n);
  gate.require(idx.exponent >= 2.0 && std::isfinite(idx.exponent), "2 <= sigma < inf");
  gate.throw_if_any();
  const double sigma = idx.exponent;
  const EnsembleSpec spec = solenoidal(setup.ensemble);
  const lp::DyadicFamily family(spec.grid());
  const auto t = setup.times();
  const auto us = make_ensemble(spec);
  const auto vs = make_ensemble(spec, spec.size);
  const BesovIndex sol{idx.r, idx.p, idx.q};
  CheckReport rep;
  for (std::size_t k = 0; k < us.size(); ++k) {
    const auto pair = nonlinear_pair(us[k], vs[k], setup, idx.alpha);
    const double num = lsigma(besov_of(family, pair.v_diff, {idx.r - 1.0, idx.p, idx.q}), t, sigma / 2.0);
    const double den = lsigma(series_of(family, pair.u, pair.v, 1.0, sol), t, sigma) *
                       lsigma(series_of(family, pair.u, pair.v, -1.0, sol), t, sigma);
    rep.ratios.push_back(ratio(num, den));
  }
  Json params = idx.to_json();
  params["sigma"] = sigma;
  return finish(std::move(rep), "nonlinearity_time_integrability", setup, params,
                "finite ||V(u) - V(v)||_{L^{sigma/2}(B^{r-1}_{p,q})} / (||u + v||_{L^sigma} ||u - v||_{L^sigma})");
}

}  // namespace lanslab::lab
