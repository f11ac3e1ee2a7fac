#include <qpart/genfun.hpp>
#include <qpart/identity.hpp>
#include <qpart/partition.hpp>
#include <qpart/series.hpp>

#include <benchmark/benchmark.h>

using namespace qpart;

static void BM_SeriesMultiply(benchmark::State &state)
{
    const Exponent T = state.range(0);
    const QSeries a = pochhammer({1, 1}, 1, std::nullopt, T);
    const QSeries b = invert(a, T);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(50)->Arg(200)->Arg(800);

static void BM_InvertEulerProduct(benchmark::State &state)
{
    const Exponent T = state.range(0);
    const QSeries a = pochhammer({1, 1}, 1, std::nullopt, T);
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert(a, T));
    }
}
BENCHMARK(BM_InvertEulerProduct)->Arg(50)->Arg(200)->Arg(800);

static void BM_QBinom(benchmark::State &state)
{
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qbinom(n, n / 2));
    }
}
BENCHMARK(BM_QBinom)->Arg(10)->Arg(20)->Arg(40);

static void BM_EnumeratePartitions(benchmark::State &state)
{
    const long n = state.range(0);
    for (auto _ : state) {
        long count = 0;
        for_each_partition(n, {}, [&](const Partition &) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(30)->Arg(40);

// Census cost of the rank tail generating function; partitions_of caches, so
// after the first iteration this measures the statistic pass alone.
static void BM_RankOracle(benchmark::State &state)
{
    const SeriesSpec spec{Family::Q, 1, 0, 0, 0, state.range(0)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_series(spec));
    }
}
BENCHMARK(BM_RankOracle)->Arg(20)->Arg(30);

static void BM_VerifyPentagonal(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_suite("pentagonal.*", std::nullopt, 1));
    }
}
BENCHMARK(BM_VerifyPentagonal)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
