#include <benchmark/benchmark.h>

#include "elsurf/mmp.hpp"
#include "elsurf/walls.hpp"

using namespace elsurf;

static void BM_RelativeMmp(benchmark::State& state, FiberType type, Rational a) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_relative_mmp(type, a));
    }
}
BENCHMARK_CAPTURE(BM_RelativeMmp, IIstar_intermediate, FiberType{FiberKind::IIstar, 0},
                  Rational(1, 2));
BENCHMARK_CAPTURE(BM_RelativeMmp, IIstar_twisted, FiberType{FiberKind::IIstar, 0}, Rational(1));
BENCHMARK_CAPTURE(BM_RelativeMmp, I9_weierstrass, FiberType{FiberKind::I, 9}, Rational(1, 3));
BENCHMARK_CAPTURE(BM_RelativeMmp, I5star_twisted, FiberType{FiberKind::Istar, 5}, Rational(1));

static void BM_Discrepancies(benchmark::State& state) {
    RelativeModel m = run_relative_mmp(FiberType{FiberKind::IIstar, 0}, Rational(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(log_discrepancies(m.trace, m.graph));
    }
}
BENCHMARK(BM_Discrepancies);

static void BM_ParametricWalls(benchmark::State& state) {
    SurfaceConfig cfg;
    cfg.genus = 0;
    cfg.deg_L = 1;
    cfg.marks = {Mark{FiberType{FiberKind::Istar, 0}, Rational(1, 3)},
                 Mark{FiberType{FiberKind::Istar, 0}, Rational(1)}};
    cfg.generic_marks = {Rational(1, 3)};
    WeightPath path;
    path.mark_weights = {Poly::variable(), Poly(1)};
    path.generic_weights = {Poly::variable()};
    for (auto _ : state) {
        benchmark::DoNotOptimize(parametric_walls(cfg, path));
    }
}
BENCHMARK(BM_ParametricWalls);

BENCHMARK_MAIN();
