#include "lanslab/lans/picard.hpp"

#include <cmath>

#include "lanslab/lans/nonlinear.hpp"
#include "lanslab/lans/semigroup.hpp"
#include "lanslab/lp/norms.hpp"

namespace lanslab::lans {
namespace {

struct NormPair {
  double r = 0.0;
  double s = 0.0;
};

NormPair node_norms(const lp::DyadicFamily& family, const SpectralField& v, const PicardIndices& idx) {
  const auto br = lp::block_norms(family, v, idx.p);
  const auto bs = idx.p_tilde == idx.p ? br : lp::block_norms(family, v, idx.p_tilde);
  return {lp::besov_from_blocks(br, idx.r, idx.q), lp::besov_from_blocks(bs, idx.s, idx.q)};
}

double mixed(const lp::DyadicFamily& family, const std::vector<SpectralField>& v, const std::vector<double>& t,
             const PicardIndices& idx, double a) {
  double r = 0.0, w = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto nn = node_norms(family, v[i], idx);
    r = std::max(r, nn.r);
    if (t[i] > 0.0) w = std::max(w, std::pow(t[i], a) * nn.s);
  }
  return r + w;
}

std::vector<SpectralField> difference(const std::vector<SpectralField>& a, const std::vector<SpectralField>& b) {
  std::vector<SpectralField> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

}  // namespace

double picard_weight_exponent(int n, const PicardIndices& idx) {
  const double r = idx.r, p = idx.p, q = idx.q, s = idx.s, pt = idx.p_tilde;
  const double nn = n;
  const double sb = s - 1.0 - r + nn / p;
  const double two_a = s - nn / pt - r + nn / p;
  ConditionList need("Picard indices inadmissible");
  need.require(p > 1.0 && p <= pt, "1 < p <= p~");
  need.require(q >= 1.0, "1 <= q <= inf");
  need.require(s > 1.0, "s > 1");
  need.require(sb * pt < nn, "sb p~ < n");
  need.require(r > nn / p, "r > n/p");
  need.require(two_a > 0.0 && two_a < 1.0, "0 < 2a = s - n/p~ - r + n/p < 1");
  need.require(sb >= 0.0 && sb < s - 1.0, "0 <= sb < s - 1");
  const double ratio = nn * pt / (2.0 * nn - sb * pt);
  need.require(2.0 * nn - sb * pt > 0.0 && ratio > 1.0 && std::isfinite(ratio), "1 < n p~ / (2n - sb p~) < inf");
  need.require(nn / pt - sb >= 0.0 && nn / pt - sb < 1.0, "0 <= n/p~ - sb < 1");
  need.require(sb <= nn / p && nn / p <= 1.0 + sb, "sb <= n/p <= 1 + sb");
  need.throw_if_any();
  return two_a / 2.0;
}

double mixed_norm(const std::vector<SpectralField>& v, const std::vector<double>& times, const PicardIndices& idx,
                  double a) {
  if (v.empty()) return 0.0;
  const lp::DyadicFamily family(v.front().grid());
  return mixed(family, v, times, idx, a);
}

nlohmann::ordered_json PicardReport::to_json() const {
  return {{"converged", converged},
          {"iterates", iterates},
          {"T", T},
          {"M", M},
          {"a", a},
          {"linear_norm", linear_norm},
          {"residuals", residuals},
          {"contraction_ratios", contraction_ratios},
          {"membership", membership},
          {"membership_ok", membership_ok},
          {"weighted_first_node", weighted_first_node},
          {"failure", failure}};
}

PicardResult picard_solve(const SpectralField& u0, const SolverConfig& cfg, const PicardIndices& idx,
                          std::optional<double> radius) {
  cfg.validate();
  const Grid& grid = u0.grid();
  if (u0.components() != grid.dimension()) throw std::invalid_argument("initial data must be a vector field");
  if (!(divergence_residual(u0) <= 1e-10)) throw std::invalid_argument("initial data is not divergence-free");
  const double a = picard_weight_exponent(grid.dimension(), idx);
  const lp::DyadicFamily family(grid);

  const int K = cfg.picard_intervals;
  std::vector<double> times(static_cast<std::size_t>(K) + 1);
  for (int i = 0; i <= K; ++i) times[i] = cfg.horizon * i / K;
  times.back() = cfg.horizon;

  std::vector<SpectralField> linear;
  linear.reserve(times.size());
  for (double t : times) linear.push_back(semigroup_apply(u0, t, cfg.nu));

  PicardReport rep;
  rep.T = cfg.horizon;
  rep.a = a;
  rep.linear_norm = mixed(family, linear, times, idx, a);
  rep.M = radius.value_or(2.0 * rep.linear_norm);

  std::vector<SpectralField> u = linear;
  const std::size_t nodes = times.size();
  for (int it = 1; it <= cfg.picard_max_iter; ++it) {
    std::vector<SpectralField> forcing(nodes, SpectralField(grid, grid.dimension()));
    // Nodes are independent; each evaluation is deterministic on its own.
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(nodes); ++i) {
      forcing[i] = projected_nonlinearity(u[i], cfg.alpha);
    }
    Trajectory g(Trajectory::Kind::forcing);
    for (std::size_t i = 0; i < nodes; ++i) g.push(times[i], std::move(forcing[i]));
    const auto duhamel = duhamel_series(g, cfg.nu, cfg.quadrature_nodes);

    std::vector<SpectralField> next;
    next.reserve(nodes);
    for (std::size_t i = 0; i < nodes; ++i) next.push_back(linear[i] - duhamel[i]);

    const double size = mixed(family, next, times, idx, a);
    const double step = mixed(family, difference(next, u), times, idx, a);
    const double rel = size > 0.0 ? step / size : step;
    double dist_r = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
      dist_r = std::max(dist_r, node_norms(family, next[i] - linear[i], idx).r);
    }
    double weighted = 0.0;
    for (std::size_t i = 1; i < nodes; ++i) {
      weighted = std::max(weighted, std::pow(times[i], a) * node_norms(family, next[i], idx).s);
    }
    const double ball = dist_r + weighted;

    rep.iterates = it;
    if (!rep.residuals.empty() && rep.residuals.back() > 0.0) rep.contraction_ratios.push_back(rel / rep.residuals.back());
    rep.residuals.push_back(rel);
    rep.membership.push_back(ball);
    if (!(ball <= rep.M * (1.0 + 1e-12))) rep.membership_ok = false;
    u = std::move(next);

    if (!std::isfinite(rel) || !std::isfinite(size) || size > cfg.blowup_threshold) {
      rep.failure = "iterates diverged at iteration " + std::to_string(it);
      break;
    }
    if (rel <= cfg.picard_tol) {
      rep.converged = rep.membership_ok;
      if (!rep.membership_ok) rep.failure = "an iterate left the ball E_{T,M}";
      break;
    }
  }
  if (!rep.converged && rep.failure.empty()) {
    rep.failure = "no convergence within " + std::to_string(cfg.picard_max_iter) + " iterations";
  }
  if (nodes > 1) rep.weighted_first_node = std::pow(times[1], a) * node_norms(family, u[1], idx).s;

  Trajectory traj;
  for (std::size_t i = 0; i < nodes; ++i) traj.push(times[i], u[i]);
  return {std::move(traj), std::move(rep)};
}

}  // namespace lanslab::lans
