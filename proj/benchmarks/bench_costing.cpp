#include <benchmark/benchmark.h>

#include "roadalign/costing.hpp"
#include "roadalign/seed.hpp"
#include "roadalign/synthetic.hpp"

namespace {

using namespace roadalign;

struct CaseStudyFixture {
    TerrainGrid terrain;
    AlignmentDesign design;
    HorizontalGeometry geom;
    CostParameters params;
    ConstraintConfig constraints;

    CaseStudyFixture() {
        SyntheticTerrainSpec spec;
        spec.kind = TerrainKind::Hills;
        spec.width = 500;
        spec.height = 1000;
        spec.cell_size = 10;
        spec.amplitude = 8;
        spec.wavelength = 250;
        spec.seed = 1;
        terrain = load_terrain(generate_raster(spec));

        constraints.min_radius = 20;
        constraints.max_grade = 0.15;
        constraints.elevation_corridor = 15;
        const Vec2 s{50, 50}, e{450, 950};
        for (int k = 0; k < 6; ++k) {
            const double f = (k + 1) / 7.0;
            const Vec2 c = s + f * (e - s);
            constraints.boxes.push_back({c.x - 40, c.x + 40, c.y - 40, c.y + 40});
        }
        const Vec3 start{s.x, s.y, terrain.ground_elevation(s.x, s.y)};
        const Vec3 end{e.x, e.y, terrain.ground_elevation(e.x, e.y)};
        design = seed_alignment(terrain, start, end, std::vector<int>(7, 5), constraints, 200);
        // bend the IPs a little so arcs are real
        for (std::size_t k = 0; k < design.ip_count(); ++k)
            design.ip_x[k] += (k % 2 ? 12.0 : -12.0);
        geom = build_horizontal(design);
    }
};

const CaseStudyFixture& fixture() {
    static CaseStudyFixture f;
    return f;
}

}  // namespace

static void BM_EvaluateCosts(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) {
        auto breakdown = evaluate_costs(f.design, f.geom, f.terrain, f.params);
        benchmark::DoNotOptimize(breakdown);
    }
}
BENCHMARK(BM_EvaluateCosts);

static void BM_BuildHorizontal(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) {
        auto geom = roadalign::build_horizontal(f.design);
        benchmark::DoNotOptimize(geom);
    }
}
BENCHMARK(BM_BuildHorizontal);

static void BM_FullEvaluation(benchmark::State& state) {
    const auto& f = fixture();
    for (auto _ : state) {
        auto geom = roadalign::build_horizontal(f.design);
        auto breakdown = evaluate_costs(f.design, geom, f.terrain, f.params);
        auto report = evaluate_constraints(f.design, geom, f.terrain, f.constraints);
        benchmark::DoNotOptimize(breakdown);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_FullEvaluation);
