#include <benchmark/benchmark.h>

#include "capitula/gaussian.hpp"

namespace {

void BM_TwoSquares(benchmark::State& state) {
  const long p = state.range(0);
  for (auto _ : state) {
    auto ts = capitula::two_squares(p);
    benchmark::DoNotOptimize(ts.e);
  }
}
BENCHMARK(BM_TwoSquares)->Arg(41)->Arg(65537)->Arg(1000033);

void BM_GaussGcd(benchmark::State& state) {
  capitula::GaussInt a{123456789, 987654321};
  capitula::GaussInt b{555555, 444444};
  for (auto _ : state) {
    auto g = capitula::gauss_gcd(a, b);
    benchmark::DoNotOptimize(g.re);
  }
}
BENCHMARK(BM_GaussGcd);

}  // namespace
