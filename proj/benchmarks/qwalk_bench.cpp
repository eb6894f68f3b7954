#include <benchmark/benchmark.h>

#include <cmath>

#include "qwalk/ctqw.hpp"
#include "qwalk/fft.hpp"
#include "qwalk/hamiltonian.hpp"
#include "qwalk/limits.hpp"
#include "qwalk/momentum.hpp"

using namespace qwalk;

namespace {

void BM_FFT(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<cplx> v(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) v[static_cast<std::size_t>(j)] = cplx(std::sin(0.1 * j), 0.2);
  for (auto _ : state) {
    std::vector<cplx> w = v;
    fft_forward(w);
    benchmark::DoNotOptimize(w.data());
  }
}
BENCHMARK(BM_FFT)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 16);

void BM_WalkEvolve(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  const CoinParameters coin = hadamard_coin();
  for (auto _ : state) {
    const SpinorState f = walk_evolve(coin, SpinorState::delta(steps + 2, 0, 0), steps);
    benchmark::DoNotOptimize(f.norm());
  }
}
BENCHMARK(BM_WalkEvolve)->Arg(64)->Arg(256)->Arg(1024);

void BM_BuildKernel(benchmark::State& state) {
  const int radius = static_cast<int>(state.range(0));
  const CoinParameters coin = hadamard_coin();
  for (auto _ : state) {
    const HamiltonianKernel h = build_kernel(coin, radius, 1e-9);
    benchmark::DoNotOptimize(h.tail_bound);
  }
}
BENCHMARK(BM_BuildKernel)->Arg(32)->Arg(48)->Arg(96);

void BM_ExpSymbol(benchmark::State& state) {
  const CoinParameters coin = hadamard_coin();
  const MomentumGrid grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const MomentumSymbol sym = exp_generator_symbol(coin, grid, 1.0);
    benchmark::DoNotOptimize(sym.values.data());
  }
}
BENCHMARK(BM_ExpSymbol)->Arg(1 << 10)->Arg(1 << 12);

void BM_Distribution(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  const ScalarSymbol k = ScalarSymbol::phi(1.0 / std::sqrt(2.0));
  for (auto _ : state) {
    const LatticeDistribution d = distribution(k, t);
    benchmark::DoNotOptimize(d.mass_deficit);
  }
}
BENCHMARK(BM_Distribution)->Arg(100)->Arg(500);

void BM_KsDistance(benchmark::State& state) {
  const ScalarSymbol k = ScalarSymbol::phi(1.0 / std::sqrt(2.0));
  const LatticeDistribution d = distribution(k, 500.0);
  const LimitDensity density = LimitDensity::konno_phi(1.0 / std::sqrt(2.0));
  for (auto _ : state) benchmark::DoNotOptimize(ks_distance(d, density));
}
BENCHMARK(BM_KsDistance);

}  // namespace

BENCHMARK_MAIN();
