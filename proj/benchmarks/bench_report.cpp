#include <benchmark/benchmark.h>

#include <sstream>

#include "capitula/report.hpp"

namespace {

void BM_FieldReport(benchmark::State& state) {
  auto pair = capitula::validate_pair(state.range(0), state.range(1));
  for (auto _ : state) {
    auto r = capitula::build_field_report(pair);
    benchmark::DoNotOptimize(r.counts.ams_size);
  }
}
BENCHMARK(BM_FieldReport)->Args({5, 29})->Args({17, 41})->Args({41, 569});

void BM_MainTheoremChecks(benchmark::State& state) {
  auto ctx = capitula::make_context(capitula::validate_pair(17, 41));
  for (auto _ : state) {
    auto rec = capitula::verify_main_theorem(ctx);
    benchmark::DoNotOptimize(rec.pass);
  }
}
BENCHMARK(BM_MainTheoremChecks);

void BM_ScanTo100(benchmark::State& state) {
  for (auto _ : state) {
    capitula::ScanOptions opts;
    opts.max_prime = 100;
    opts.jobs = 1;
    std::ostringstream sink;
    auto sum = capitula::run_scan(opts, sink);
    benchmark::DoNotOptimize(sum.pairs);
  }
}
BENCHMARK(BM_ScanTo100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
