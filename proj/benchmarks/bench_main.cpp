#include <benchmark/benchmark.h>

#include <random>

#include "ramtower/formal.hpp"
#include "ramtower/herbrand.hpp"
#include "ramtower/polygon.hpp"
#include "ramtower/tate.hpp"
#include "ramtower/towers.hpp"

using namespace ramtower;

static std::vector<ValPoint> points(std::size_t n) {
    std::mt19937_64 rng(n);
    std::vector<ValPoint> pts;
    for (std::size_t k = 0; k < n; ++k) {
        pts.push_back({static_cast<std::int64_t>(k), make_rat(static_cast<long>(rng() % 200) - 100, static_cast<long>(1 + rng() % 7))});
    }
    return pts;
}

static void BM_BuildPolygon(benchmark::State& state) {
    const auto pts = points(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_polygon(pts));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildPolygon)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_ComposeTower(benchmark::State& state) {
    const TowerParams P{3, 3, 1, 1, 0, Rat(1)};
    const auto layers = tower_layers(P, static_cast<std::uint32_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose_tower(layers));
    }
}
BENCHMARK(BM_ComposeTower)->DenseRange(2, 12, 5);

static void BM_AtypicalModule(benchmark::State& state) {
    const ADescriptor A = ADescriptor::make(3, 9);
    const ATypicalSpec spec{{1, Rat(1)}, {2, Rat(1)}};
    const auto D = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(atypical_module(A, spec, D));
    }
}
BENCHMARK(BM_AtypicalModule)->Arg(81)->Arg(243)->Arg(729)->Unit(benchmark::kMillisecond);

static void BM_GroupLawCheck(benchmark::State& state) {
    const ADescriptor A = ADescriptor::make(2, 4);
    const auto R = reduce_module(atypical_module(A, {{1, Rat(1)}, {2, Rat(1)}}, static_cast<std::size_t>(state.range(0))),
                                 fq_make(2, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_group_law(R.law));
    }
}
BENCHMARK(BM_GroupLawCheck)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_TateBreaks(benchmark::State& state) {
    const auto F = fq_make(5, 1);
    const SeriesPoly f = SeriesPoly::from_terms(F, {{0, LaurentSeries::t(F)},
                                                    {1, LaurentSeries::monomial(F, F->one(), state.range(0))},
                                                    {5, LaurentSeries::constant(F, F->one())}});
    const EisensteinExtPtr E = EisensteinExt::make(f);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tate_breaks(E));
    }
}
BENCHMARK(BM_TateBreaks)->Arg(1)->Arg(3);

static void BM_TorsionTrace(benchmark::State& state) {
    const std::vector<std::optional<Rat>> v{Rat(5), Rat(2), std::nullopt, Rat(1)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(torsion_valuations(v, 2, 3, static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_TorsionTrace)->Arg(8)->Arg(32);

static void BM_DefaultGrid(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_default_grid());
    }
}
BENCHMARK(BM_DefaultGrid)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
