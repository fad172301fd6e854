#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "lanslab/lans/config.hpp"
#include "lanslab/lans/trajectory.hpp"

namespace lanslab::lans {

/// Thrown when the L^2 norm of the state exceeds the configured threshold or
/// stops being finite. Carries the samples produced so far.
class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, double t, Trajectory partial)
      : std::runtime_error(what), time_(t), partial_(std::move(partial)) {}
  double time() const { return time_; }
  const Trajectory& partial() const { return partial_; }

 private:
  double time_;
  Trajectory partial_;
};

/// Integrating-factor RK4 for du/dt = nu Delta u - P^alpha V^alpha(u).
///
/// The horizon is split into ceil(T / dt) equal steps (dt is shortened
/// slightly when it does not divide T). Samples are kept at t = 0, every
/// `sample_stride` steps, and at T. u0 must be divergence-free. The observer,
/// when set, sees the state at t = 0 and after every step regardless of the
/// stride.
using StepObserver = std::function<void(double t, const SpectralField& u)>;
Trajectory solve_ivp(const SpectralField& u0, const SolverConfig& cfg, const StepObserver& observer = {});

/// One IFRK4 step of size h.
SpectralField ifrk4_step(const SpectralField& u, double h, double nu, double alpha);

}  // namespace lanslab::lans
