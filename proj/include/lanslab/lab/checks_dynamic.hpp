#pragma once

#include <vector>

#include "lanslab/lab/functionals.hpp"
#include "lanslab/lab/report.hpp"

namespace lanslab::lab {

using spectral::SpectralField;

/// Per-sample quantities for the energy check, recorded without keeping states.
struct EnergySeries {
  double alpha = 1.0;
  std::vector<double> t;
  std::vector<double> energy;
  std::vector<double> low_l2;  // ||Psi*u||_2
  std::vector<double> h1;      // ||u||_{H^{1,2}}
  void add(double time, const SpectralField& u);
  static EnergySeries of(const Trajectory& traj, double alpha);
};

/// Step-wise energy check: with h_i = t_{i+1} - t_i the
/// per-step ratio is (E_{i+1} - E_i) / (E_i h_i^4), E = ||u||^2 + alpha^2 ||grad u||^2,
/// and the step passes when it does not exceed `tolerance_constant`. Also
/// checks ||Psi*u||_2 <= ||u||_{H^{1,2}} at every sample.
CheckReport check_energy_monotone(const EnergySeries& series, double tolerance_constant = 1.0);

struct GronwallParams {
  double r = 2.5;
  double q = 2.0;
  /// Largest relative change of the max implied constant under dt -> dt/2.
  double refinement_tolerance = 0.1;
};
/// Implied constants C_i = max(d/dt ||u||^q_{B~^r_{2,q}}, 0) / (||u||_{B~^{1+n/2}_{2,q}} ||u||^q_{B~^r_{2,q}})
/// at interior samples, with centered differences. `refined` is the same run
/// with half the step; when given, the max implied constants must agree to
/// within the tolerance. Throws ParameterError unless r > 2 and 1 <= q < inf.
CheckReport check_gronwall_differential(const Trajectory& traj, const GronwallParams& params,
                                        const Trajectory* refined = nullptr);

struct AprioriParams {
  double r = 2.5;
  double q = 2.0;
  /// Largest admissible max/min spread of |sup_t C_impl| across runs.
  double spread_limit = 10.0;
};

/// C_impl(t_i) = log(||u(t_i)||_{B^r_{2,q}} / ||u0||_{B^r_{2,q}}) / int_0^{t_i} ||u||_{B^{1+n/2}_{2,q}},
/// for the samples with a positive integral.
struct AprioriProfile {
  std::vector<double> t;
  std::vector<double> c_impl;
  /// False when u0 = 0 (nothing to normalize by).
  bool defined = true;
  double sup() const;
};
AprioriProfile apriori_profile(const Trajectory& traj, const AprioriParams& params);

/// One ratio (sup_t C_impl) per run; passes when all are finite and, with at
/// least two runs, max|sup| / min|sup| <= spread_limit. Runs with u0 = 0 are
/// skipped. Throws ParameterError unless r > 2 and 1 <= q < inf.
CheckReport check_apriori_bound(const std::vector<Trajectory>& runs, const std::vector<double>& labels,
                                const AprioriParams& params);

/// Gate shared by the two checks above.
void require_gronwall_indices(double r, double q);

}  // namespace lanslab::lab
