// Serial reference kernels against their OpenMP versions, plus one full
// nonlinearity evaluation. Set OMP_NUM_THREADS to compare team sizes.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lanslab/lans/initial_data.hpp"
#include "lanslab/lans/nonlinear.hpp"
#include "lanslab/spectral/kernels.hpp"

using namespace lanslab;

namespace {

struct Data {
  std::vector<double> a, b, out, w;
  std::vector<kernels::Complex> z;
  explicit Data(std::size_t n) : a(n), b(n), out(n), w(n), z(n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1, 1);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
      w[i] = std::abs(u(rng));
      z[i] = {u(rng), u(rng)};
    }
  }
};

template <bool Parallel>
void BM_MultiplyAdd(benchmark::State& state) {
  Data d(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) kernels::parallel::multiply_add(d.a, d.b, d.out);
    else kernels::serial::multiply_add(d.a, d.b, d.out);
    benchmark::DoNotOptimize(d.out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_Scale(benchmark::State& state) {
  Data d(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) kernels::parallel::scale(d.z, d.w);
    else kernels::serial::scale(d.z, d.w);
    benchmark::DoNotOptimize(d.z.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_WeightedSumSq(benchmark::State& state) {
  Data d(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const double s = Parallel ? kernels::parallel::weighted_sum_sq(d.z, d.w) : kernels::serial::weighted_sum_sq(d.z, d.w);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_SumNormPow(benchmark::State& state) {
  Data d(static_cast<std::size_t>(state.range(0)));
  std::vector<std::span<const double>> comps{d.a, d.b};
  for (auto _ : state) {
    const double s = Parallel ? kernels::parallel::sum_norm_pow(comps, 3.0) : kernels::serial::sum_norm_pow(comps, 3.0);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ProjectedNonlinearity(benchmark::State& state) {
  const spectral::Grid grid(3, static_cast<int>(state.range(0)));
  const auto u = lans::taylor_green(grid, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(lans::projected_nonlinearity(u, 1.0));
}

}  // namespace

BENCHMARK(BM_MultiplyAdd<false>)->Arg(1 << 15)->Arg(1 << 18);
BENCHMARK(BM_MultiplyAdd<true>)->Arg(1 << 15)->Arg(1 << 18);
BENCHMARK(BM_Scale<false>)->Arg(1 << 15)->Arg(1 << 18);
BENCHMARK(BM_Scale<true>)->Arg(1 << 15)->Arg(1 << 18);
BENCHMARK(BM_WeightedSumSq<false>)->Arg(1 << 15)->Arg(1 << 18);
BENCHMARK(BM_WeightedSumSq<true>)->Arg(1 << 15)->Arg(1 << 18);
BENCHMARK(BM_SumNormPow<false>)->Arg(1 << 15)->Arg(1 << 18);
BENCHMARK(BM_SumNormPow<true>)->Arg(1 << 15)->Arg(1 << 18);
BENCHMARK(BM_ProjectedNonlinearity)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
