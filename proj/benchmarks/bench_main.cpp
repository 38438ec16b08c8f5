#include <benchmark/benchmark.h>

#include "modcurve/classify.hpp"

using namespace modcurve;

static void BM_GenusSweep(benchmark::State& state) {
    int max_n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long total = 0;
        for (int n = 3; n <= max_n; ++n)
            for (const auto& d : subgroups_containing_minus1(n)) total += genus(d);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_GenusSweep)->Arg(64)->Arg(131)->Unit(benchmark::kMillisecond);

static void BM_CosetAction(benchmark::State& state) {
    auto d = resolve_delta(static_cast<int>(state.range(0)), "X1");
    for (auto _ : state) {
        CosetAction action(d);
        benchmark::DoNotOptimize(action.cusp_count());
    }
}
BENCHMARK(BM_CosetAction)->Arg(37)->Arg(131)->Unit(benchmark::kMicrosecond);

static void BM_FixedPointsX0(benchmark::State& state) {
    i64 n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(fixed_points_X0(n, n).count());
}
BENCHMARK(BM_FixedPointsX0)->Arg(34)->Arg(131)->Arg(255)->Unit(benchmark::kMicrosecond);

static void BM_OrbitFixedPoints(benchmark::State& state) {
    auto d = resolve_delta(64, "D3");
    CosetAction action(d);
    IntMat2 m{1, 0, 32, 1};
    for (auto _ : state) benchmark::DoNotOptimize(orbit_fixed_points(action, m).total());
}
BENCHMARK(BM_OrbitFixedPoints)->Unit(benchmark::kMicrosecond);

static void BM_ReducedClasses(benchmark::State& state) {
    for (auto _ : state)
        for (i64 disc = -3; disc >= -524; --disc)
            if (is_discriminant(disc)) benchmark::DoNotOptimize(reduced_classes(disc).size());
}
BENCHMARK(BM_ReducedClasses)->Unit(benchmark::kMillisecond);

static void BM_Census(benchmark::State& state) {
    int max_n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(census(max_n).size());
}
BENCHMARK(BM_Census)->Arg(40)->Arg(131)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
