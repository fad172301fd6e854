#include "lanslab/lans/trajectory.hpp"

#include <cmath>
#include <iomanip>
#include <stdexcept>

#include "lanslab/spectral/multiplier.hpp"

namespace lanslab::lans {

Trajectory::Trajectory(const Trajectory& other) : kind_(other.kind_), samples_(other.samples_) {
  std::lock_guard lock(other.cache_mutex_);
  cache_ = other.cache_;
}

Trajectory& Trajectory::operator=(const Trajectory& other) {
  if (this == &other) return *this;
  kind_ = other.kind_;
  samples_ = other.samples_;
  std::scoped_lock lock(cache_mutex_, other.cache_mutex_);
  cache_ = other.cache_;
  return *this;
}

Trajectory::Trajectory(Trajectory&& other) noexcept
    : kind_(other.kind_), samples_(std::move(other.samples_)), cache_(std::move(other.cache_)) {}

Trajectory& Trajectory::operator=(Trajectory&& other) noexcept {
  kind_ = other.kind_;
  samples_ = std::move(other.samples_);
  cache_ = std::move(other.cache_);
  return *this;
}

void Trajectory::push(double t, SpectralField u) {
  if (!std::isfinite(t)) throw std::invalid_argument("trajectory time must be finite");
  if (!samples_.empty()) {
    if (!(t > samples_.back().t)) throw std::invalid_argument("trajectory times must increase strictly");
    if (!(u.grid() == samples_.back().u.grid()) || u.components() != samples_.back().u.components()) {
      throw std::invalid_argument("trajectory sample changes grid or shape");
    }
  }
  if (kind_ == Kind::solenoidal) {
    const double res = divergence_residual(u);
    if (!(res <= 1e-10)) {
      throw std::invalid_argument("trajectory sample at t=" + std::to_string(t) +
                                  " is not divergence-free (residual " + std::to_string(res) + ")");
    }
  }
  samples_.push_back({t, std::move(u)});
  std::lock_guard lock(cache_mutex_);
  cache_.clear();
}

std::vector<double> Trajectory::times() const {
  std::vector<double> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) out.push_back(s.t);
  return out;
}

const Grid& Trajectory::grid() const {
  if (samples_.empty()) throw std::logic_error("empty trajectory has no grid");
  return samples_.front().u.grid();
}

std::vector<double> Trajectory::besov_series(const lp::DyadicFamily& family, const lp::BesovIndex& idx,
                                             bool include_low) const {
  const Key key{family.max_index(), idx.s, idx.p, idx.q, include_low};
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  idx.validate();
  std::vector<double> out(samples_.size());
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto blocks = lp::block_norms(family, samples_[i].u, idx.p);
    out[i] = lp::besov_from_blocks(blocks, idx.s, idx.q, include_low);
  }
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(key, out);
  return out;
}

double divergence_residual(const SpectralField& u) {
  const double norm = spectral::l2_norm(u);
  if (norm == 0.0) return 0.0;
  return spectral::l2_norm(spectral::divergence(u)) / norm;
}

double lans_energy(const SpectralField& u, double alpha) {
  const double a = spectral::l2_norm(u);
  const double g = spectral::gradient_l2_norm(u);
  return a * a + alpha * alpha * g * g;
}

std::vector<DiagnosticsRow> diagnostics(const Trajectory& traj, const lp::DyadicFamily& family, double alpha,
                                        double r, double q) {
  const double n = family.grid().dimension();
  const auto br = traj.besov_series(family, {r, 2.0, q});
  const auto bc = traj.besov_series(family, {1.0 + n / 2.0, 2.0, q});
  std::vector<DiagnosticsRow> rows;
  rows.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto& u = traj[i].u;
    DiagnosticsRow row;
    row.t = traj[i].t;
    row.energy = lans_energy(u, alpha);
    row.l2 = spectral::l2_norm(u);
    row.grad_l2 = spectral::gradient_l2_norm(u);
    row.besov_r = br[i];
    row.besov_critical = bc[i];
    row.div_residual = divergence_residual(u);
    rows.push_back(row);
  }
  return rows;
}

void write_diagnostics_csv(std::ostream& out, const std::vector<DiagnosticsRow>& rows) {
  out << "t,E,u_l2,grad_u_l2,besov_r,besov_crit,div_residual\n";
  out << std::setprecision(17);
  for (const auto& r : rows) {
    out << r.t << ',' << r.energy << ',' << r.l2 << ',' << r.grad_l2 << ',' << r.besov_r << ','
        << r.besov_critical << ',' << r.div_residual << '\n';
  }
}

}  // namespace lanslab::lans
