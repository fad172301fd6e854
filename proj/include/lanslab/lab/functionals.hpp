#pragma once

#include <span>
#include <vector>

#include "lanslab/lans/trajectory.hpp"

namespace lanslab::lab {

using lans::Trajectory;
using lp::BesovIndex;

/// Composite Simpson rule on an arbitrary increasing grid. Pairs of intervals
/// use the three-point rule; an odd interval out at the end integrates the
/// quadratic through the last three points over its own span; two points fall
/// back to the trapezoid.
double simpson(std::span<const double> t, std::span<const double> f);
/// Running integrals int_{t_0}^{t_i} f for every i.
std::vector<double> cumulative_simpson(std::span<const double> t, std::span<const double> f);

/// ||f||_{a;s,p,q} = sup_t t^a ||f(t)||_{B^s_{p,q}}. For a > 0 the t = 0 sample
/// is skipped; for a = 0 every sample counts.
double ct_norm(const Trajectory& traj, const lp::DyadicFamily& family, double a, const BesovIndex& idx);

/// (int_0^T ||f(t)||^sigma_{B^s_{p,q}} dt)^{1/sigma} on the trajectory's own grid.
double lsigma_norm(const Trajectory& traj, const lp::DyadicFamily& family, double sigma, const BesovIndex& idx);

/// A time functional description.
struct TimeFunctional {
  enum class Kind { sup_weighted, integral };
  Kind kind = Kind::sup_weighted;
  /// a for sup_weighted (>= 0), sigma for integral (>= 1).
  double exponent = 0.0;
  BesovIndex index;

  void validate() const;
  double evaluate(const Trajectory& traj, const lp::DyadicFamily& family) const;
};

}  // namespace lanslab::lab
