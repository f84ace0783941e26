#include <benchmark/benchmark.h>

#include "fixpoint/instances.hpp"
#include "fixpoint/iteration.hpp"
#include "fixpoint/maia.hpp"
#include "fixpoint/oracle.hpp"

using namespace fixpoint;

static void BM_BuildMaiaMetric(benchmark::State& state) {
    GeneratorParams gp;
    gp.seed = 11;
    gp.n = static_cast<int>(state.range(0));
    gp.target = TheoremId::T2;
    InstanceSpec spec = gen_theorem_instance(gp);
    for (auto _ : state) {
        auto dm = build_maia_metric(spec.space, spec.alpha, *spec.lambda, 1e-9);
        benchmark::DoNotOptimize(dm.table);
    }
}
BENCHMARK(BM_BuildMaiaMetric)->Arg(6)->Arg(12)->Arg(24);

static void BM_TheoremSuite(benchmark::State& state) {
    GeneratorParams gp;
    gp.seed = 11;
    gp.n = static_cast<int>(state.range(0));
    gp.target = TheoremId::T4;
    InstanceSpec spec = gen_theorem_instance(gp);
    SuiteParams params = spec.suite_params();
    for (auto _ : state) {
        auto verdict = theorem_suite(spec.space, TheoremId::T4, params);
        benchmark::DoNotOptimize(verdict.hypotheses);
    }
}
BENCHMARK(BM_TheoremSuite)->Arg(6)->Arg(12);

static void BM_GenInstance(benchmark::State& state) {
    std::uint64_t seed = 1;
    for (auto _ : state) {
        GeneratorParams gp;
        gp.seed = seed++;
        gp.n = static_cast<int>(state.range(0));
        gp.target = TheoremId::T2;
        auto spec = gen_theorem_instance(gp);
        benchmark::DoNotOptimize(spec.space.dist);
    }
}
BENCHMARK(BM_GenInstance)->Arg(6)->Arg(12);

static void BM_Orbit(benchmark::State& state) {
    FiniteSpace grid = half_map_grid();
    ScalarGauge phi = linear_gauge(0.5);
    for (auto _ : state) {
        auto result = run_picard(grid, grid.n - 1, phi);
        benchmark::DoNotOptimize(result.steps);
    }
}
BENCHMARK(BM_Orbit);

BENCHMARK_MAIN();
