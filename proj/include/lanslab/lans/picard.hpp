#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lanslab/errors.hpp"
#include "lanslab/lans/config.hpp"
#include "lanslab/lans/trajectory.hpp"

namespace lanslab::lans {

using lanslab::ParameterError;

/// Solution space B^r_{p,q} and auxiliary space B^s_{p~,q} with weight t^a.
struct PicardIndices {
  double r = 2.0;
  double p = 2.0;
  double q = 2.0;
  double s = 2.5;
  double p_tilde = 2.0;
};

/// Contraction conditions with b = 1, writing sb = s - 1 - r + n/p:
///
///   1 < p <= p~,  1 <= q <= inf,  s > 1,  sb p~ < n,  r > n/p,
///   0 < 2a = s - n/p~ - r + n/p < 1,  0 <= sb < s - 1,
///   1 < n p~ / (2n - sb p~) < inf,  0 <= n/p~ - sb < 1,  sb <= n/p <= 1 + sb.
///
/// Returns a; throws ParameterError listing each violated line.
double picard_weight_exponent(int n, const PicardIndices& idx);

struct PicardReport {
  int iterates = 0;
  /// Relative mixed-norm residual ||Phi u - u|| / ||Phi u|| per iteration.
  std::vector<double> residuals;
  /// residuals[m] / residuals[m-1]
  std::vector<double> contraction_ratios;
  /// ||v - Gamma phi||_{0;r,p,q} + ||v||_{a;s,p~,q} for each iterate.
  std::vector<double> membership;
  bool membership_ok = true;
  double M = 0.0;
  double T = 0.0;
  double a = 0.0;
  /// Mixed norm of Gamma phi.
  double linear_norm = 0.0;
  /// t^a ||v(t)||_{B^s} at the first positive node of the final iterate
  /// (diagnostic for the vanishing-weight condition at t = 0).
  double weighted_first_node = 0.0;
  bool converged = false;
  std::string failure;

  nlohmann::ordered_json to_json() const;
};

struct PicardResult {
  Trajectory trajectory;
  PicardReport report;
};

/// Iterates u <- Gamma phi - G.P^alpha V^alpha(u) from u = Gamma phi on the
/// node grid t_i = i T / picard_intervals, until the relative mixed-norm
/// residual drops below picard_tol. M defaults to twice the mixed norm of
/// Gamma phi. Converged means: residual below tolerance and every iterate in
/// the ball E_{T,M}.
PicardResult picard_solve(const SpectralField& u0, const SolverConfig& cfg, const PicardIndices& idx,
                          std::optional<double> radius = std::nullopt);

/// Mixed norm sup_t ||v||_{B^r_{p,q}} + sup_{t>0} t^a ||v||_{B^s_{p~,q}} over a node grid.
double mixed_norm(const std::vector<SpectralField>& v, const std::vector<double>& times, const PicardIndices& idx,
                  double a);

}  // namespace lanslab::lans
