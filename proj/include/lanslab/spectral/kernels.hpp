#pragma once

#include <complex>
#include <span>

namespace lanslab::kernels {

using Complex = std::complex<double>;

// Data-parallel inner loops. Every kernel exists twice with identical
// signatures: `serial` is the plain reference loop kept for testing, and
// `parallel` is the OpenMP version used by the library. Reductions in the
// parallel versions sum fixed-size chunks in a fixed order, so results do not
// depend on the thread count.

inline constexpr std::size_t kReductionChunks = 64;

namespace serial {

/// data[i] *= symbol[i]
void scale(std::span<Complex> data, std::span<const double> symbol);
/// y[i] += alpha * x[i]
void axpy(double alpha, std::span<const Complex> x, std::span<Complex> y);
/// out[i] = a[i] * b[i]
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
/// out[i] += a[i] * b[i]
void multiply_add(std::span<const double> a, std::span<const double> b, std::span<double> out);
/// sum_i weight[i] * |c[i]|^2
double weighted_sum_sq(std::span<const Complex> c, std::span<const double> weight);
/// sum_i |v(i)|^p where v(i) is the vector (comp[0][i], comp[1][i], ...).
double sum_norm_pow(std::span<const std::span<const double>> comps, double p);
/// max_i |v(i)|
double max_norm(std::span<const std::span<const double>> comps);

}  // namespace serial

namespace parallel {

void scale(std::span<Complex> data, std::span<const double> symbol);
void axpy(double alpha, std::span<const Complex> x, std::span<Complex> y);
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
void multiply_add(std::span<const double> a, std::span<const double> b, std::span<double> out);
double weighted_sum_sq(std::span<const Complex> c, std::span<const double> weight);
double sum_norm_pow(std::span<const std::span<const double>> comps, double p);
double max_norm(std::span<const std::span<const double>> comps);

}  // namespace parallel

/// Sets the OpenMP team size used by `parallel` kernels (<= 0 keeps default).
void set_thread_count(int threads);
int thread_count();

}  // namespace lanslab::kernels
