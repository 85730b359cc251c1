#include <benchmark/benchmark.h>

#include <npyth/angle.hpp>
#include <npyth/area.hpp>
#include <npyth/critical_degree.hpp>
#include <npyth/verification.hpp>

using namespace npyth;

static void BM_VertexAngle(benchmark::State& state) {
    const SideRatio gamma(1.5);
    const Degree n(static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(vertex_angle(gamma, n));
    }
}
BENCHMARK(BM_VertexAngle)->Arg(2)->Arg(37)->Arg(5000);

static void BM_SolveNcritCold(benchmark::State& state) {
    double g = 1.01;
    for (auto _ : state) {
        // step gamma to defeat the memo cache and time the actual solve
        g += 1e-9;
        benchmark::DoNotOptimize(solve_ncrit(SideRatio(g)));
    }
}
BENCHMARK(BM_SolveNcritCold);

static void BM_SolveNcritCached(benchmark::State& state) {
    const SideRatio gamma(1.5);
    solve_ncrit(gamma);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_ncrit(gamma));
    }
}
BENCHMARK(BM_SolveNcritCached);

static void BM_AreaFixedPerimeter(benchmark::State& state) {
    const SideRatio gamma(1.3);
    const Degree n(3.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(area_fixed_perimeter(1.0, gamma, n));
    }
}
BENCHMARK(BM_AreaFixedPerimeter);

static void BM_HeronArea(benchmark::State& state) {
    const TriangleSides sides = side_lengths(1.0, SideRatio(1.3), Degree(3.5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(heron_area(sides));
    }
}
BENCHMARK(BM_HeronArea);

BENCHMARK_MAIN();
