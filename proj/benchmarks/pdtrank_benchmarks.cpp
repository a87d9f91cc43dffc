#include <benchmark/benchmark.h>

#include "pdtrank/pdtrank.hpp"

namespace {

using namespace pdtrank;

void BM_EnumerateS1(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::uint64_t count = 0;
        for_each_s1(n, [&](const OverlinePartition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateS1)->Arg(10)->Arg(15)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_NdtCounts(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ndt_counts(n));
}
BENCHMARK(BM_NdtCounts)->Arg(10)->Arg(15)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_SeriesMultiply(benchmark::State& state) {
    const int terms = static_cast<int>(state.range(0));
    const Series a = pdt_generating_function(terms);
    const Series b = euler_product(1, terms);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiply)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_SeriesInverse(benchmark::State& state) {
    const Series a = euler_product(1, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_SeriesInverse)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_DissectionSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dissection_series(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DissectionSeries)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
