// OpenMP sweep kernels against their serial references.

#include <benchmark/benchmark.h>

#include "slls/analysis.h"

namespace {

using slls::Scheme;
namespace analysis = slls::analysis;

std::size_t Base2Law(std::uint64_t n) { return 2 * analysis::CeilLog(2, n); }

void BM_SizeTableParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(analysis::SizeTable(analysis::kMaxTablePosition));
  }
}
BENCHMARK(BM_SizeTableParallel)->Unit(benchmark::kMillisecond);

void BM_SizeTableSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        analysis::serial::SizeTable(analysis::kMaxTablePosition));
  }
}
BENCHMARK(BM_SizeTableSerial)->Unit(benchmark::kMillisecond);

void BM_SizeLawParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(analysis::SizeLawViolations(
        Scheme::SkipList(2), 5, state.range(0), Base2Law));
  }
}
BENCHMARK(BM_SizeLawParallel)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_SizeLawSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(analysis::serial::SizeLawViolations(
        Scheme::SkipList(2), 5, state.range(0), Base2Law));
  }
}
BENCHMARK(BM_SizeLawSerial)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

void BM_StatsParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        analysis::ComputeSchemeStats(Scheme::SkipList(2), state.range(0)));
  }
}
BENCHMARK(BM_StatsParallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_StatsSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        analysis::serial::ComputeSchemeStats(Scheme::SkipList(2), state.range(0)));
  }
}
BENCHMARK(BM_StatsSerial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_GreedyBfsParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        analysis::GreedyBfsMismatches(Scheme::SkipList(2), state.range(0)));
  }
}
BENCHMARK(BM_GreedyBfsParallel)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_GreedyBfsSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        analysis::serial::GreedyBfsMismatches(Scheme::SkipList(2), state.range(0)));
  }
}
BENCHMARK(BM_GreedyBfsSerial)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
