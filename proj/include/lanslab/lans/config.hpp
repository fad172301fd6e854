#pragma once

#include <cstdint>

namespace lanslab::lans {

/// Physical and numerical parameters of a LANS-alpha run.
struct SolverConfig {
  double alpha = 1.0;  // alpha = 0 gives Navier-Stokes
  double nu = 1.0;
  int dimension = 3;
  int points = 32;
  double dt = 1e-3;
  double horizon = 1.0;
  /// Relative tolerance on the mixed-norm Picard residual.
  double picard_tol = 1e-10;
  int picard_max_iter = 40;
  /// Gauss-Legendre points per interval in Duhamel integrals.
  int quadrature_nodes = 16;
  /// Time intervals of the Picard node grid on [0, horizon].
  int picard_intervals = 40;
  /// Emit a trajectory sample every this many steps (stepper).
  int sample_stride = 1;
  /// Norm above which the stepper declares blow-up.
  double blowup_threshold = 1e6;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

}  // namespace lanslab::lans
