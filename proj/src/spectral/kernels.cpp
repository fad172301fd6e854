#include "lanslab/spectral/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace lanslab::kernels {
namespace {

void require_same(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("kernel operands differ in length");
}

double point_norm_sq(std::span<const std::span<const double>> comps, std::size_t i) {
  double s = 0.0;
  for (const auto& c : comps) s += c[i] * c[i];
  return s;
}

double point_norm_pow(std::span<const std::span<const double>> comps, std::size_t i, double p) {
  const double sq = point_norm_sq(comps, i);
  if (p == 2.0) return sq;
  return std::pow(std::sqrt(sq), p);
}

std::size_t length_of(std::span<const std::span<const double>> comps) {
  if (comps.empty()) return 0;
  for (const auto& c : comps) require_same(c.size(), comps[0].size());
  return comps[0].size();
}

struct ChunkRange {
  std::size_t begin, end;
};

ChunkRange chunk(std::size_t n, std::size_t c) {
  return {n * c / kReductionChunks, n * (c + 1) / kReductionChunks};
}

}  // namespace

namespace serial {

void scale(std::span<Complex> data, std::span<const double> symbol) {
  require_same(data.size(), symbol.size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] *= symbol[i];
}

void axpy(double alpha, std::span<const Complex> x, std::span<Complex> y) {
  require_same(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  require_same(a.size(), b.size());
  require_same(a.size(), out.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void multiply_add(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  require_same(a.size(), b.size());
  require_same(a.size(), out.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i] * b[i];
}

double weighted_sum_sq(std::span<const Complex> c, std::span<const double> weight) {
  require_same(c.size(), weight.size());
  double s = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) s += weight[i] * std::norm(c[i]);
  return s;
}

double sum_norm_pow(std::span<const std::span<const double>> comps, double p) {
  const std::size_t n = length_of(comps);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += point_norm_pow(comps, i, p);
  return s;
}

double max_norm(std::span<const std::span<const double>> comps) {
  const std::size_t n = length_of(comps);
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, point_norm_sq(comps, i));
  return std::sqrt(m);
}

}  // namespace serial

namespace parallel {

void scale(std::span<Complex> data, std::span<const double> symbol) {
  require_same(data.size(), symbol.size());
  const auto n = static_cast<std::ptrdiff_t>(data.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) data[i] *= symbol[i];
}

void axpy(double alpha, std::span<const Complex> x, std::span<Complex> y) {
  require_same(x.size(), y.size());
  const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  require_same(a.size(), b.size());
  require_same(a.size(), out.size());
  const auto n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void multiply_add(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  require_same(a.size(), b.size());
  require_same(a.size(), out.size());
  const auto n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] += a[i] * b[i];
}

double weighted_sum_sq(std::span<const Complex> c, std::span<const double> weight) {
  require_same(c.size(), weight.size());
  std::array<double, kReductionChunks> partial{};
  const std::size_t n = c.size();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(kReductionChunks); ++k) {
    const auto r = chunk(n, static_cast<std::size_t>(k));
    double s = 0.0;
    for (std::size_t i = r.begin; i < r.end; ++i) s += weight[i] * std::norm(c[i]);
    partial[k] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

double sum_norm_pow(std::span<const std::span<const double>> comps, double p) {
  const std::size_t n = length_of(comps);
  std::array<double, kReductionChunks> partial{};
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(kReductionChunks); ++k) {
    const auto r = chunk(n, static_cast<std::size_t>(k));
    double s = 0.0;
    for (std::size_t i = r.begin; i < r.end; ++i) s += point_norm_pow(comps, i, p);
    partial[k] = s;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

double max_norm(std::span<const std::span<const double>> comps) {
  const std::size_t n = length_of(comps);
  std::array<double, kReductionChunks> partial{};
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(kReductionChunks); ++k) {
    const auto r = chunk(n, static_cast<std::size_t>(k));
    double m = 0.0;
    for (std::size_t i = r.begin; i < r.end; ++i) m = std::max(m, point_norm_sq(comps, i));
    partial[k] = m;
  }
  return std::sqrt(*std::max_element(partial.begin(), partial.end()));
}

}  // namespace parallel

void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace lanslab::kernels
