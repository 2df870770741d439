#include <benchmark/benchmark.h>

#include <cmath>

#include "geoconvex/counterexample.hpp"
#include "geoconvex/special.hpp"
#include "geoconvex/transforms.hpp"
#include "geoconvex/volume.hpp"

using namespace geoconvex;

namespace {

GridFunction parabola(int dim, int n) {
  const GridSpec s = GridSpec::symmetric(dim, 2.0, n);
  std::vector<double> v(s.size());
  const GridFunction probe(s, v);
  for (std::size_t i = 0; i < s.size(); ++i) {
    double acc = 0;
    for (double t : probe.node(i)) acc += t * t;
    v[i] = acc;
  }
  return GridFunction(s, v);
}

void BM_LegendreFast1D(benchmark::State& state) {
  const GridFunction f = parabola(1, static_cast<int>(state.range(0)));
  TransformOptions opts;
  opts.output = legendre_dual_spec(f);
  for (auto _ : state) benchmark::DoNotOptimize(legendre(f, opts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LegendreFast1D)->Arg(129)->Arg(513)->Arg(2049)->Arg(8193)->Complexity();

void BM_LegendreNaive1D(benchmark::State& state) {
  const GridFunction f = parabola(1, static_cast<int>(state.range(0)));
  const GridSpec dual = legendre_dual_spec(f);
  for (auto _ : state) benchmark::DoNotOptimize(legendre_naive(f, dual));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LegendreNaive1D)->Arg(129)->Arg(513)->Arg(2049)->Complexity();

void BM_LegendreFast2D(benchmark::State& state) {
  const GridFunction f = parabola(2, static_cast<int>(state.range(0)));
  TransformOptions opts;
  opts.output = legendre_dual_spec(f);
  for (auto _ : state) benchmark::DoNotOptimize(legendre(f, opts));
}
BENCHMARK(BM_LegendreFast2D)->Arg(33)->Arg(65)->Arg(129);

void BM_LegendreNaive2D(benchmark::State& state) {
  const GridFunction f = parabola(2, static_cast<int>(state.range(0)));
  const GridSpec dual = legendre_dual_spec(f);
  for (auto _ : state) benchmark::DoNotOptimize(legendre_naive(f, dual));
}
BENCHMARK(BM_LegendreNaive2D)->Arg(33)->Arg(65);

void BM_IncompleteGamma(benchmark::State& state) {
  const double a = static_cast<double>(state.range(0));
  double x = a;
  for (auto _ : state) {
    benchmark::DoNotOptimize(regularized_gamma(a, x + 2));
    x = x == a ? 2 * a : a;
  }
}
BENCHMARK(BM_IncompleteGamma)->Arg(10)->Arg(1000)->Arg(100000);

void BM_RatioTable(benchmark::State& state) {
  const auto ns = log_spaced(1, static_cast<int>(state.range(0)), 40);
  for (auto _ : state) benchmark::DoNotOptimize(appendix_table(ns));
}
BENCHMARK(BM_RatioTable)->Arg(10000)->Arg(1000000);

void BM_RatioQuadrature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(big_R_quadrature(n));
}
BENCHMARK(BM_RatioQuadrature)->Arg(10)->Arg(1000);

void BM_VolumeRoutes(benchmark::State& state) {
  const StructuredFunction f = CounterexampleFamily{2, 0.5}.interpolant();
  for (auto _ : state) {
    switch (state.range(0)) {
      case 0: benchmark::DoNotOptimize(vol_quadrature(f)); break;
      case 1: benchmark::DoNotOptimize(vol_via_g(f)); break;
      default: benchmark::DoNotOptimize(vol_via_levels(f)); break;
    }
  }
}
BENCHMARK(BM_VolumeRoutes)->DenseRange(0, 2);

}  // namespace

BENCHMARK_MAIN();
