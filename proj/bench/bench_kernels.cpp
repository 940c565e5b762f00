// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "normeuclid/cyclozeta.hpp"
#include "normeuclid/lenstra.hpp"

namespace {

using namespace normeuclid;

void BM_GapTableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lenstra::gap_table_serial(0.1, 62000, 62000 + state.range(0)));
}
void BM_GapTableParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lenstra::gap_table(0.1, 62000, 62000 + state.range(0)));
}
BENCHMARK(BM_GapTableSerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GapTableParallel)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_EulerSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::euler_log_sum_serial(60, 1.5, state.range(0)));
}
void BM_EulerParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::euler_log_sum(60, 1.5, state.range(0)));
}
BENCHMARK(BM_EulerSerial)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EulerParallel)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_ScanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::scan_serial(state.range(0), 0.75));
}
void BM_ScanParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cyclo::scan(state.range(0), 0.75));
}
BENCHMARK(BM_ScanSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
