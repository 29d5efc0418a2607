#include <benchmark/benchmark.h>

#include "specht/classifier.hpp"
#include "specht/enumeration.hpp"
#include "specht/partition.hpp"

using namespace specht;

static void BM_EnumeratePartitions(benchmark::State& state) {
    const long long n = state.range(0);
    for (auto _ : state) {
        long long count = 0;
        for_each_partition(n, [&count](const Partition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(30)->Arg(40);

static void BM_CoreWeightSweep(benchmark::State& state) {
    const long long n = state.range(0);
    auto partitions = enumerate_partitions(n);
    for (auto _ : state)
        for (const auto& mu : partitions)
            for (int m = 2; m <= 9; ++m)
                benchmark::DoNotOptimize(m_core_weight(mu, m).weight);
}
BENCHMARK(BM_CoreWeightSweep)->Arg(15)->Arg(25);

static void BM_HookGridSweep(benchmark::State& state) {
    const long long n = state.range(0);
    auto partitions = enumerate_partitions(n);
    for (auto _ : state)
        for (const auto& mu : partitions)
            benchmark::DoNotOptimize(count_hooks_divisible(mu, 4));
}
BENCHMARK(BM_HookGridSweep)->Arg(20)->Arg(30);

static void BM_Classify(benchmark::State& state) {
    const long long n = state.range(0);
    auto partitions = enumerate_partitions(n);
    for (auto _ : state)
        for (const auto& mu : partitions) {
            SpechtContext ctx;
            ctx.mu = mu;
            ctx.p = 3;
            benchmark::DoNotOptimize(classify(ctx).status);
        }
}
BENCHMARK(BM_Classify)->Arg(12)->Arg(18);

BENCHMARK_MAIN();
