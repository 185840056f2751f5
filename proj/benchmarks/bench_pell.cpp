#include <benchmark/benchmark.h>

#include "capitula/pell.hpp"

namespace {

void BM_FundamentalUnitSmall(benchmark::State& state) {
  const long d = state.range(0);
  for (auto _ : state) {
    auto u = capitula::fundamental_unit(d);
    benchmark::DoNotOptimize(u.x);
  }
}
BENCHMARK(BM_FundamentalUnitSmall)->Arg(1394)->Arg(3034)->Arg(46658);

// Largest-period case in the worked-example set.
void BM_UnitTableSweep(benchmark::State& state) {
  static const long ds[] = {1394,  3298,  15266, 890,  1802,  5402,  290,
                            442,   754,   1066,  410,  2938,  3034,  8090,
                            7298,  16498, 12994, 14722, 32882, 46658, 4010,
                            130,   2146,  962,   1378, 1258,  3842,  5002};
  for (auto _ : state) {
    capitula::Int acc = 0;
    for (long d : ds) acc += capitula::fundamental_unit(d).x;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_UnitTableSweep)->Unit(benchmark::kMillisecond);

void BM_PeriodLength(benchmark::State& state) {
  const long d = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(capitula::cf_period_length(d));
}
BENCHMARK(BM_PeriodLength)->Arg(3034)->Arg(46658);

}  // namespace
