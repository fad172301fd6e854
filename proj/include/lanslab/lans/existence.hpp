#pragma once

#include <functional>
#include <ostream>
#include <vector>

#include "lanslab/lans/picard.hpp"

namespace lanslab::lans {

struct ExistenceOptions {
  /// Largest horizon tried; a run certified here reports T = t_cap (the
  /// stand-in for T = infinity).
  double t_cap = 2.0;
  int bisection_steps = 10;
};

struct ExistenceRow {
  double amplitude = 0.0;
  double norm_r = 0.0;  // ||u0||_{B^r_{p,q}}
  double certified_T = 0.0;
  int picard_runs = 0;
};

/// For each amplitude A, the largest horizon T in [0, t_cap] (to bisection
/// resolution) on which picard_solve converges from data(A). T = 0 means no
/// horizon was certified.
std::vector<ExistenceRow> estimate_existence_time(const std::vector<double>& amplitudes,
                                                  const std::function<SpectralField(double)>& data,
                                                  const SolverConfig& cfg, const PicardIndices& idx,
                                                  const ExistenceOptions& opts = {});

/// Header amplitude,norm_r,certified_T,picard_runs.
void write_existence_csv(std::ostream& out, const std::vector<ExistenceRow>& rows);

}  // namespace lanslab::lans
