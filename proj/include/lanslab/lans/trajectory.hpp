#pragma once

#include <map>
#include <mutex>
#include <ostream>
#include <tuple>
#include <vector>

#include "lanslab/lp/norms.hpp"
#include "lanslab/spectral/field.hpp"

namespace lanslab::lans {

using spectral::Grid;
using spectral::SpectralField;

struct TrajectorySample {
  double t = 0.0;
  SpectralField u;
};

/// Time-ordered samples of a field, stored as Fourier coefficients.
///
/// A solenoidal trajectory rejects samples with ||div u||_2 > 1e-10 ||u||_2;
/// forcing trajectories (arbitrary vector fields) skip that check.
class Trajectory {
 public:
  enum class Kind { solenoidal, forcing };

  explicit Trajectory(Kind kind = Kind::solenoidal) : kind_(kind) {}
  Trajectory(const Trajectory& other);
  Trajectory& operator=(const Trajectory& other);
  Trajectory(Trajectory&&) noexcept;
  Trajectory& operator=(Trajectory&&) noexcept;

  /// Throws std::invalid_argument when t does not exceed the last time, the
  /// grid or shape changes, or a solenoidal sample has divergence.
  void push(double t, SpectralField u);

  Kind kind() const { return kind_; }
  bool empty() const { return samples_.empty(); }
  std::size_t size() const { return samples_.size(); }
  const TrajectorySample& operator[](std::size_t i) const { return samples_[i]; }
  const TrajectorySample& front() const { return samples_.front(); }
  const TrajectorySample& back() const { return samples_.back(); }
  std::vector<double> times() const;
  const Grid& grid() const;

  /// ||u(t_i)||_{B^s_{p,q}} for every sample, cached per (J, s, p, q).
  std::vector<double> besov_series(const lp::DyadicFamily& family, const lp::BesovIndex& idx,
                                   bool include_low = true) const;

 private:
  using Key = std::tuple<int, double, double, double, bool>;
  Kind kind_;
  std::vector<TrajectorySample> samples_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Key, std::vector<double>> cache_;
};

/// ||div u||_2 / ||u||_2, zero for the zero field.
double divergence_residual(const SpectralField& u);
/// ||u||_2^2 + alpha^2 ||grad u||_2^2
double lans_energy(const SpectralField& u, double alpha);

struct DiagnosticsRow {
  double t = 0.0;
  double energy = 0.0;
  double l2 = 0.0;
  double grad_l2 = 0.0;
  double besov_r = 0.0;
  double besov_critical = 0.0;  // B^{1+n/2}_{2,q}
  double div_residual = 0.0;
};

std::vector<DiagnosticsRow> diagnostics(const Trajectory& traj, const lp::DyadicFamily& family, double alpha,
                                        double r, double q);

/// Header t,E,u_l2,grad_u_l2,besov_r,besov_crit,div_residual; 17 significant digits.
void write_diagnostics_csv(std::ostream& out, const std::vector<DiagnosticsRow>& rows);

}  // namespace lanslab::lans
