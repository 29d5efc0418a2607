#include <benchmark/benchmark.h>

#include "specht/modrep.hpp"

using namespace specht;

static void BM_SpechtBasis(benchmark::State& state) {
    for (auto _ : state) {
        SpechtRealization real(Partition({7, 1, 1, 1}), 3, 1);
        benchmark::DoNotOptimize(real.dim());
    }
}
BENCHMARK(BM_SpechtBasis);

static void BM_RestrictAction(benchmark::State& state) {
    SpechtRealization real(Partition({7, 1, 1, 1}), 3, 1);
    ElementaryAbelian sub = ElementaryAbelian::v1_power(3, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(restrict_action(real, sub).dim);
}
BENCHMARK(BM_RestrictAction);

static void BM_FullSweep(benchmark::State& state) {
    SpechtRealization real(Partition({7, 1, 1, 1}), 3, 1);
    ModuleAction action = restrict_action(real, ElementaryAbelian::v1_power(3, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep_all_points(action).points.size());
}
BENCHMARK(BM_FullSweep);

static void BM_JordanProfile(benchmark::State& state) {
    SpechtRealization real(Partition({7, 1, 1, 1}), 3, 1);
    ModuleAction action = restrict_action(real, ElementaryAbelian::v1_power(3, 3));
    GFpMatrix u = GFpMatrix::identity(action.field, static_cast<int>(action.dim));
    for (std::size_t i = 0; i < action.generators.size(); ++i) {
        GFpMatrix d = action.generators[i] -
                      GFpMatrix::identity(action.field, static_cast<int>(action.dim));
        u = u + d;
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(jordan_profile(u, 3).projective());
}
BENCHMARK(BM_JordanProfile);

BENCHMARK_MAIN();
