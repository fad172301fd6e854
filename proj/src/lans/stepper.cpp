#include "lanslab/lans/stepper.hpp"

#include <cmath>

#include "lanslab/lans/nonlinear.hpp"
#include "lanslab/spectral/multiplier.hpp"

namespace lanslab::lans {

void SolverConfig::validate() const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite and >= 0");
  if (!(nu > 0.0) || !std::isfinite(nu)) throw std::invalid_argument("nu must be finite and > 0");
  if (dimension != 2 && dimension != 3) throw std::invalid_argument("dimension must be 2 or 3");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be > 0");
  if (!(horizon > 0.0)) throw std::invalid_argument("horizon T must be > 0");
  if (!(picard_tol > 0.0)) throw std::invalid_argument("picard_tol must be > 0");
  if (picard_max_iter < 1) throw std::invalid_argument("picard_max_iter must be >= 1");
  if (quadrature_nodes < 1) throw std::invalid_argument("quadrature_nodes must be >= 1");
  if (picard_intervals < 1) throw std::invalid_argument("picard_intervals must be >= 1");
  if (sample_stride < 1) throw std::invalid_argument("sample_stride must be >= 1");
  if (!(blowup_threshold > 0.0)) throw std::invalid_argument("blowup_threshold must be > 0");
}

SpectralField ifrk4_step(const SpectralField& u, double h, double nu, double alpha) {
  const auto& grid = u.grid();
  const auto half = spectral::MultiplierSymbol::heat(grid, nu * h / 2);
  const auto full = spectral::MultiplierSymbol::heat(grid, nu * h);
  auto rhs = [&](const SpectralField& v) { return -1.0 * projected_nonlinearity(v, alpha); };

  const SpectralField k1 = rhs(u);
  SpectralField stage = u;
  stage.add_scaled(h / 2, k1);
  const SpectralField eu_half = spectral::apply_multiplier(half, u);
  const SpectralField k2 = rhs(spectral::apply_multiplier(half, stage));
  stage = eu_half;
  stage.add_scaled(h / 2, k2);
  const SpectralField k3 = rhs(stage);
  stage = spectral::apply_multiplier(full, u);
  stage.add_scaled(h, spectral::apply_multiplier(half, k3));
  const SpectralField k4 = rhs(stage);

  SpectralField out = spectral::apply_multiplier(full, u);
  out.add_scaled(h / 6, spectral::apply_multiplier(full, k1));
  SpectralField mid = k2;
  mid += k3;
  out.add_scaled(h / 3, spectral::apply_multiplier(half, mid));
  out.add_scaled(h / 6, k4);
  return out;
}

Trajectory solve_ivp(const SpectralField& u0, const SolverConfig& cfg, const StepObserver& observer) {
  cfg.validate();
  if (u0.components() != u0.grid().dimension()) throw std::invalid_argument("initial data must be a vector field");
  if (!(divergence_residual(u0) <= 1e-10)) throw std::invalid_argument("initial data is not divergence-free");

  const auto steps = static_cast<long>(std::ceil(cfg.horizon / cfg.dt - 1e-9));
  const double h = cfg.horizon / static_cast<double>(steps);
  Trajectory traj;
  traj.push(0.0, u0);
  if (observer) observer(0.0, u0);
  SpectralField u = u0;
  for (long step = 1; step <= steps; ++step) {
    u = ifrk4_step(u, h, cfg.nu, cfg.alpha);
    const double t = step == steps ? cfg.horizon : static_cast<double>(step) * h;
    const double norm = spectral::l2_norm(u);
    if (!std::isfinite(norm) || norm > cfg.blowup_threshold) {
      throw BlowUpError("blow-up at t=" + std::to_string(t) + ": ||u||_2 = " + std::to_string(norm), t,
                        std::move(traj));
    }
    if (observer) observer(t, u);
    if (step % cfg.sample_stride == 0 || step == steps) traj.push(t, u);
  }
  return traj;
}

}  // namespace lanslab::lans
