#include "lanslab/lab/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace lanslab::lab {
namespace {

// int_{x0}^{x2} of the quadratic through (x0,f0), (x1,f1), (x2,f2).
double pair_rule(double h0, double h1, double f0, double f1, double f2) {
  const double h = h0 + h1;
  return h / 6.0 * ((2.0 - h1 / h0) * f0 + h * h / (h0 * h1) * f1 + (2.0 - h0 / h1) * f2);
}

// int_{x1}^{x2} of the same quadratic.
double tail_rule(double h0, double h1, double f0, double f1, double f2) {
  const double a = (2.0 * h1 * h1 + 3.0 * h0 * h1) / (6.0 * (h0 + h1));
  const double b = (h1 * h1 + 3.0 * h0 * h1) / (6.0 * h0);
  const double c = h1 * h1 * h1 / (6.0 * h0 * (h0 + h1));
  return a * f2 + b * f1 - c * f0;
}

void check_grid(std::span<const double> t, std::span<const double> f) {
  if (t.size() != f.size()) throw std::invalid_argument("quadrature grid and values differ in length");
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (!(t[i] > t[i - 1])) throw std::invalid_argument("quadrature grid must increase strictly");
  }
}

}  // namespace

double simpson(std::span<const double> t, std::span<const double> f) {
  check_grid(t, f);
  const std::size_t n = t.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * (t[1] - t[0]) * (f[0] + f[1]);
  double acc = 0.0;
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) acc += pair_rule(t[i + 1] - t[i], t[i + 2] - t[i + 1], f[i], f[i + 1], f[i + 2]);
  if (i + 1 < n) acc += tail_rule(t[i] - t[i - 1], t[i + 1] - t[i], f[i - 1], f[i], f[i + 1]);
  return acc;
}

std::vector<double> cumulative_simpson(std::span<const double> t, std::span<const double> f) {
  check_grid(t, f);
  const std::size_t n = t.size();
  std::vector<double> out(n, 0.0);
  if (n == 2) out[1] = simpson(t, f);
  if (n < 3) return out;
  // The first interval takes the quadratic through the first three points
  // rather than the trapezoid.
  const double full = pair_rule(t[1] - t[0], t[2] - t[1], f[0], f[1], f[2]);
  out[1] = full - tail_rule(t[1] - t[0], t[2] - t[1], f[0], f[1], f[2]);
  for (std::size_t i = 2; i < n; ++i) {
    const double h0 = t[i - 1] - t[i - 2], h1 = t[i] - t[i - 1];
    out[i] = i % 2 == 0 ? out[i - 2] + pair_rule(h0, h1, f[i - 2], f[i - 1], f[i])
                        : out[i - 1] + tail_rule(h0, h1, f[i - 2], f[i - 1], f[i]);
  }
  return out;
}

double ct_norm(const Trajectory& traj, const lp::DyadicFamily& family, double a, const BesovIndex& idx) {
  if (!(a >= 0.0)) throw std::invalid_argument("weight exponent a must be >= 0");
  if (traj.empty()) throw std::invalid_argument("time functional of an empty trajectory");
  const auto norms = traj.besov_series(family, idx);
  double out = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double t = traj[i].t;
    if (a > 0.0 && t <= 0.0) continue;
    out = std::max(out, (a > 0.0 ? std::pow(t, a) : 1.0) * norms[i]);
  }
  return out;
}

double lsigma_norm(const Trajectory& traj, const lp::DyadicFamily& family, double sigma, const BesovIndex& idx) {
  if (!(sigma >= 1.0)) throw std::invalid_argument("integrability exponent sigma must be >= 1");
  if (traj.empty()) throw std::invalid_argument("time functional of an empty trajectory");
  const auto norms = traj.besov_series(family, idx);
  std::vector<double> powered(norms.size());
  for (std::size_t i = 0; i < norms.size(); ++i) powered[i] = std::pow(norms[i], sigma);
  const auto t = traj.times();
  return std::pow(std::max(0.0, simpson(t, powered)), 1.0 / sigma);
}

void TimeFunctional::validate() const {
  if (kind == Kind::sup_weighted && !(exponent >= 0.0)) throw std::invalid_argument("a must be >= 0");
  if (kind == Kind::integral && !(exponent >= 1.0)) throw std::invalid_argument("sigma must be >= 1");
  index.validate();
}

double TimeFunctional::evaluate(const Trajectory& traj, const lp::DyadicFamily& family) const {
  validate();
  return kind == Kind::sup_weighted ? ct_norm(traj, family, exponent, index)
                                    : lsigma_norm(traj, family, exponent, index);
}

}  // namespace lanslab::lab
