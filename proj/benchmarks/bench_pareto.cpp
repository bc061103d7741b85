#include <benchmark/benchmark.h>

#include <random>

#include "roadalign/pareto.hpp"

static void BM_ParetoFilter(benchmark::State& state) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(0.0, 1000.0);
    std::vector<roadalign::FrontPoint> points(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < points.size(); ++i) {
        points[i].objectives = {dist(rng), dist(rng)};
        points[i].evaluation_index = i;
    }
    for (auto _ : state) {
        auto front = roadalign::pareto_filter(points);
        benchmark::DoNotOptimize(front);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ParetoFilter)->RangeMultiplier(4)->Range(256, 16384)->Complexity();
