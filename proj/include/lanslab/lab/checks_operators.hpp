#pragma once

#include "lanslab/lab/checks_static.hpp"
#include "lanslab/lab/functionals.hpp"

namespace lanslab::lab {

/// Ensemble and time grid shared by the operator checks. Every trial starts
/// from a random field u0 and evolves it by the heat semigroup. The grid is
/// t = 0, then log-spaced times from t_min up to h = horizon / m, then uniform
/// steps of h, with m = (time_points - 1) / 2.
struct OperatorSetup {
  EnsembleSpec ensemble{3, 16, 8, 1, 4.0, 1.0};
  double horizon = 1.0;
  double t_min = 1e-3;
  int time_points = 65;
  double nu = 1.0;

  std::vector<double> times() const;
  Json to_json() const;
};

/// Mapping indices s0 <= s1, 1 <= p0 <= p1 < inf, q, with
/// sigma = s1 - s0 + n (1/p0 - 1/p1).
struct MappingIndices {
  double s0 = 0.0, p0 = 2.0;
  double s1 = 1.0, p1 = 2.0;
  double q = 2.0;
  double sigma(int n) const { return s1 - s0 + n * (1.0 / p0 - 1.0 / p1); }
  Json to_json() const;
};

/// sup_t t^{sigma/2} ||Gamma u0(t)||_{B^{s1}_{p1,q}} / ||u0||_{B^{s0}_{p0,q}}.
CheckReport check_semigroup_weighted_mapping(const OperatorSetup& setup, const MappingIndices& idx);

/// ||Gamma u0||_{L^sigma(B^{s1}_{p1,q})} / ||u0||_{B^{s0}_{p0,q}} with
/// 1/sigma = sigma_idx / 2 (sigma_idx from MappingIndices), 1 < p0, q < inf.
CheckReport check_semigroup_time_integrability(const OperatorSetup& setup, const MappingIndices& idx);

/// sup_t t^{k1} ||G.g(t)||_{B^{s1}_{p1,q}} / sup_t t^{k0} ||g(t)||_{B^{s0}_{p0,q}},
/// g = Gamma u0, k1 = k0 + sigma/2 - 1; requires 0 < sigma/2 < 1, 0 <= k0 < 1.
CheckReport check_duhamel_weighted_mapping(const OperatorSetup& setup, const MappingIndices& idx, double k0);

/// ||G.g||_{L^{sigma1}(B^{s1}_{p1,q})} / ||g||_{L^{sigma0}(B^{s0}_{p0,q})}, with
/// 1/sigma0 - 1/sigma1 = 1 - sigma_idx / 2 and 1 < sigma0 < sigma1 < inf.
CheckReport check_duhamel_integral_mapping(const OperatorSetup& setup, const MappingIndices& idx, double sigma0);

/// sup_t ||G.g(t)||_{B^{s1}_{p1,q}} / ||g||_{L^sigma(B^{s0}_{p0,q})} with
/// 1/sigma = 1 - sigma_idx / 2, 1/p1 <= 1/sigma, 1 < p0, q < inf.
CheckReport check_duhamel_continuity(const OperatorSetup& setup, const MappingIndices& idx);

/// Indices of the tau estimate plus a time weight.
struct NonlinearIndices {
  double r = 3.0;
  double p = 2.0;
  double p_bar = 2.0;
  double q = 2.0;
  double alpha = 1.0;
  /// Weight exponent a (weighted form) or integrability sigma (integral form).
  double exponent = 0.5;
  Json to_json() const;
};

/// Lipschitz form on semigroup trajectories u = Gamma u0, v = Gamma v0:
/// ||V(u) - V(v)||_{a; r-1, p_bar, q} / ((||u||_{a/2; r,p,q} + ||v||_{a/2; r,p,q}) ||u - v||_{a/2; r,p,q}).
CheckReport check_nonlinearity_weighted_mapping(const OperatorSetup& setup, const NonlinearIndices& idx);

/// Integral form, sigma >= 2:
/// ||V(u) - V(v)||_{L^{sigma/2}(B^{r-1}_{p,q})} / (||u + v||_{L^sigma(B^r_{p,q})} ||u - v||_{L^sigma(B^r_{p,q})}).
CheckReport check_nonlinearity_time_integrability(const OperatorSetup& setup, const NonlinearIndices& idx);

}  // namespace lanslab::lab
