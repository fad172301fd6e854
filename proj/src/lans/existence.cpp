#include "lanslab/lans/existence.hpp"

#include <iomanip>
#include <stdexcept>

#include "lanslab/lp/norms.hpp"

namespace lanslab::lans {

std::vector<ExistenceRow> estimate_existence_time(const std::vector<double>& amplitudes,
                                                  const std::function<SpectralField(double)>& data,
                                                  const SolverConfig& cfg, const PicardIndices& idx,
                                                  const ExistenceOptions& opts) {
  if (!(opts.t_cap > 0.0)) throw std::invalid_argument("t_cap must be > 0");
  if (opts.bisection_steps < 0) throw std::invalid_argument("bisection_steps must be >= 0");
  std::vector<ExistenceRow> rows;
  for (double amp : amplitudes) {
    const SpectralField u0 = data(amp);
    const lp::DyadicFamily family(u0.grid());
    ExistenceRow row;
    row.amplitude = amp;
    row.norm_r = lp::besov_norm(family, u0, {idx.r, idx.p, idx.q});

    auto certified = [&](double horizon) {
      SolverConfig run = cfg;
      run.horizon = horizon;
      ++row.picard_runs;
      return picard_solve(u0, run, idx).report.converged;
    };

    if (certified(opts.t_cap)) {
      row.certified_T = opts.t_cap;
    } else {
      double lo = 0.0, hi = opts.t_cap;
      for (int step = 0; step < opts.bisection_steps; ++step) {
        const double mid = 0.5 * (lo + hi);
        (certified(mid) ? lo : hi) = mid;
      }
      row.certified_T = lo;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_existence_csv(std::ostream& out, const std::vector<ExistenceRow>& rows) {
  out << "amplitude,norm_r,certified_T,picard_runs\n" << std::setprecision(17);
  for (const auto& r : rows) {
    out << r.amplitude << ',' << r.norm_r << ',' << r.certified_T << ',' << r.picard_runs << '\n';
  }
}

}  // namespace lanslab::lans
