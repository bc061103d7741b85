#include <doctest.h>

#include <random>

#include "roadalign/constraints.hpp"
#include "roadalign/errors.hpp"
#include "roadalign/seed.hpp"
#include "roadalign/synthetic.hpp"
#include "support/oracles.hpp"

using namespace roadalign;

namespace {

TerrainGrid flat_terrain(double level, std::size_t cells = 20, double cell_size = 10.0) {
    const std::size_t n = cells * cells;
    return TerrainGrid(0.0, 0.0, cell_size, cells, cells, std::vector<double>(n, 0.0),
                       std::vector<double>(n, 0.0), std::vector<double>(n, level));
}

// two gentle corners on a 200 m course
AlignmentDesign two_corner_design() {
    AlignmentDesign d;
    d.start = {10.0, 100.0, 50.0};
    d.end = {190.0, 100.0, 50.0};
    d.ip_x = {70.0, 130.0};
    d.ip_y = {130.0, 70.0};
    d.radius = {25.0, 25.0};
    d.subdivisions = {3, 3, 3};
    d.elevations.assign(elevation_count(d.subdivisions), 50.0);
    return d;
}

ConstraintConfig wide_config(std::size_t n_ips) {
    ConstraintConfig c;
    c.min_radius = 20.0;
    c.max_grade = 0.15;
    c.elevation_corridor = 10.0;
    for (std::size_t k = 0; k < n_ips; ++k) c.boxes.push_back({10.0, 190.0, 10.0, 190.0});
    return c;
}

}  // namespace

TEST_CASE("well-separated curves do not overlap") {
    const AlignmentDesign d = two_corner_design();
    const HorizontalGeometry geom = build_horizontal(d);
    for (const ConstraintViolation& v : check_overlap(geom)) CHECK(v.value < 0.0);
}

TEST_CASE("touching curves sit exactly on the overlap boundary") {
    // symmetric corner: center chord length 2L makes TC_1 coincide with CT_0
    AlignmentDesign d = two_corner_design();
    const HorizontalGeometry geom = build_horizontal(d);
    const double len = geom.curves[0].tangent_len;
    const double chord = distance(geom.curves[0].ip, geom.curves[1].ip);
    // scale both radii so 2 L == chord
    const double factor = chord / (2.0 * len);
    d.radius[0] *= factor;
    d.radius[1] *= factor;
    const HorizontalGeometry touching = build_horizontal(d);
    const auto violations = check_overlap(touching);
    CHECK(violations[1].value == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(distance(touching.curves[0].ct, touching.curves[1].tc) < 1e-6);
}

TEST_CASE("a radius sweep flips the overlap sign exactly once") {
    AlignmentDesign d = two_corner_design();
    double previous = -1.0;
    int flips = 0;
    for (double scale = 0.5; scale < 4.0; scale += 0.05) {
        AlignmentDesign scaled = d;
        scaled.radius[0] = d.radius[0] * scale;
        scaled.radius[1] = d.radius[1] * scale;
        const HorizontalGeometry geom = build_horizontal(scaled);
        const double worst = check_overlap(geom)[1].value;
        if (previous < 0.0 && worst >= 0.0) ++flips;
        CHECK((scale < 1.0 ? worst < 0.0 : true));
        previous = worst;
    }
    CHECK(flips == 1);
}

TEST_CASE("an oversized curve on a short chord is flagged as overlapping") {
    // r = 20 on a 10 m chord: the tangent length spills past both neighbours
    AlignmentDesign d;
    d.start = {0.0, 0.0, 0.0};
    d.end = {10.0, 10.0, 0.0};
    d.ip_x = {10.0};
    d.ip_y = {0.0};
    d.radius = {20.0};
    d.subdivisions = {1, 1};
    d.elevations.assign(elevation_count(d.subdivisions), 0.0);
    const HorizontalGeometry geom = build_horizontal(d);
    CHECK(geom.curves[0].center.x == doctest::Approx(-10.0));
    CHECK(geom.curves[0].center.y == doctest::Approx(20.0));
    const auto violations = check_overlap(geom);
    CHECK(violations[0].value == doctest::Approx(10.0));  // L exceeds the chord by 10
    CHECK(violations[1].value == doctest::Approx(10.0));
}

TEST_CASE("radius violations are signed distances to the bound") {
    AlignmentDesign d = two_corner_design();
    d.radius = {20.0, 25.0};
    auto violations = check_radius(d, 20.0);
    CHECK(violations[0].value == doctest::Approx(0.0));
    CHECK(violations[1].value == doctest::Approx(-5.0));
    d.radius[1] = 15.0;
    violations = check_radius(d, 20.0);
    CHECK(violations[1].value == doctest::Approx(5.0));
}

TEST_CASE("grade violations per station pair and per arc") {
    AlignmentDesign d;
    d.start = {0.0, 50.0, 10.0};
    d.end = {40.0, 50.0, 10.0};
    d.ip_x = {20.0};
    d.ip_y = {50.0};
    d.radius = {5.0};
    d.subdivisions = {2, 2};  // 10 m stations on each chord
    d.elevations.assign(elevation_count(d.subdivisions), 10.0);
    const HorizontalGeometry geom = build_horizontal(d);

    // flat profile: violation is -spacing*G on every pair
    for (const ConstraintViolation& v : check_grade(d, geom, 0.15)) {
        if (v.index == 2) continue;  // the degenerate arc contributes 0
        CHECK(v.value == doctest::Approx(-1.5).epsilon(1e-9));
    }

    // +1.5 m over a 10 m station: exactly on the bound
    const ElevationLayout layout(d.subdivisions);
    d.elevations[static_cast<std::size_t>(layout.index_of(0, 1))] = 11.5;
    auto violations = check_grade(d, geom, 0.15);
    CHECK(violations[0].value == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(violations[1].value == doctest::Approx(0.0).epsilon(1e-9));  // back down

    std::mt19937_64 rng(211);
    std::uniform_real_distribution<double> zdist(8.0, 12.0);
    for (double& z : d.elevations) z = zdist(rng);
    // every violation recomputes from raw elevations
    std::size_t ordinal = 0;
    for (std::size_t k = 0; k < d.tangent_count(); ++k) {
        const double spacing = station_spacing(geom, k);
        const auto all = check_grade(d, geom, 0.15);
        for (int j = 1; j <= d.subdivisions[k]; ++j, ++ordinal) {
            const double dz = std::abs(station_elevation(d, k, j) - station_elevation(d, k, j - 1));
            CHECK(all[ordinal].value == doctest::Approx(dz - spacing * 0.15).epsilon(1e-12));
        }
        if (k < geom.curve_count()) ++ordinal;
    }
}

TEST_CASE("grade over a real arc uses the horizontal arc length") {
    AlignmentDesign d;
    d.start = {0.0, 0.0, 10.0};
    d.end = {60.0, 60.0, 10.0};
    d.ip_x = {60.0};
    d.ip_y = {0.0};
    d.radius = {20.0};
    d.subdivisions = {1, 1};
    d.elevations.assign(elevation_count(d.subdivisions), 10.0);
    const HorizontalGeometry geom = build_horizontal(d);
    REQUIRE(!geom.curves[0].degenerate);
    const double run = 20.0 * std::abs(geom.curves[0].sweep());

    const ElevationLayout layout(d.subdivisions);
    const auto tc_station = layout.index_of(0, 1);
    const auto ct_station = layout.index_of(1, 0);
    d.elevations[static_cast<std::size_t>(tc_station)] = 10.0;
    d.elevations[static_cast<std::size_t>(ct_station)] = 10.0 + run * 0.15;
    const auto violations = check_grade(d, geom, 0.15);
    // the arc's pair is the second entry (tangent 0 has one pair, then arc)
    CHECK(violations[1].value == doctest::Approx(0.0).epsilon(1e-9));
    d.elevations[static_cast<std::size_t>(ct_station)] = 10.0 + run * 0.15 + 1.0;
    CHECK(check_grade(d, geom, 0.15)[1].value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("elevation corridor measures the offset from the ground") {
    const TerrainGrid terrain = flat_terrain(50.0);
    AlignmentDesign d = two_corner_design();
    const HorizontalGeometry geom = build_horizontal(d);

    for (const ConstraintViolation& v : check_elevation_corridor(d, geom, terrain, 10.0))
        CHECK(v.value == doctest::Approx(-10.0));

    AlignmentDesign lifted = d;
    lifted.start.z = lifted.end.z = 60.0;
    for (double& z : lifted.elevations) z = 60.0;
    for (const ConstraintViolation& v : check_elevation_corridor(lifted, geom, terrain, 10.0))
        CHECK(v.value == doctest::Approx(0.0).epsilon(1e-9));

    std::mt19937_64 rng(223);
    const TerrainGrid rough = oracles::random_patch_terrain(rng, 20, 10.0, 0.2, 50.0, 5.0);
    const auto violations = check_elevation_corridor(d, geom, rough, 10.0);
    std::size_t ordinal = 0;
    for (std::size_t k = 0; k < d.tangent_count(); ++k) {
        for (int j = 0; j <= d.subdivisions[k]; ++j, ++ordinal) {
            const Vec2 p = station_coordinates(geom, k, j);
            const double expected =
                std::abs(station_elevation(d, k, j) - rough.ground_elevation(p.x, p.y)) - 10.0;
            CHECK(violations[ordinal].value == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("box violations are exit distances per coordinate") {
    AlignmentDesign d = two_corner_design();
    ConstraintConfig config = wide_config(2);
    config.boxes[0] = {60.0, 80.0, 120.0, 140.0};

    auto violations = check_boxes(d, config);
    CHECK(violations[0].value == doctest::Approx(-10.0));  // x: center of [60,80]
    CHECK(violations[1].value == doctest::Approx(-10.0));

    d.ip_x[0] = 80.0;  // on the edge
    violations = check_boxes(d, config);
    CHECK(violations[0].value == doctest::Approx(0.0));

    d.ip_x[0] = 85.0;  // - outside by 5
    violations = check_boxes(d, config);
    CHECK(violations[0].value == doctest::Approx(5.0));
}

TEST_CASE("penalty is the weighted sum of squared positive violations") {
    ConstraintReport report = aggregate({{ConstraintFamily::Box, 0, -1.0},
                                         {ConstraintFamily::MinRadius, 0, -0.5}});
    CHECK(report.feasible);
    CHECK(penalty(report, 10.0) == doctest::Approx(0.0));

    report = aggregate({{ConstraintFamily::Box, 0, 2.0}});
    CHECK(!report.feasible);
    CHECK(penalty(report, 10.0) == doctest::Approx(40.0));

    report = aggregate({{ConstraintFamily::Box, 0, 2.0}, {ConstraintFamily::MaxGrade, 1, 3.0}});
    CHECK(penalty(report, 1.0) == doctest::Approx(4.0 + 9.0));
    CHECK(report.worst == doctest::Approx(3.0));
}

TEST_CASE("feasibility is invariant under rigid translation") {
    std::mt19937_64 rng(227);
    const TerrainGrid terrain = oracles::random_patch_terrain(rng, 20, 10.0, 0.2, 50.0, 5.0);
    AlignmentDesign d = two_corner_design();
    ConstraintConfig config = wide_config(2);
    const HorizontalGeometry geom = build_horizontal(d);
    const ConstraintReport before = evaluate_constraints(d, geom, terrain, config);

    const double dx = 17.0, dy = -23.0;
    std::vector<double> a2, b2, c2;
    for (std::size_t v = 0; v < terrain.n_rows(); ++v) {
        for (std::size_t u = 0; u < terrain.n_cols(); ++u) {
            a2.push_back(terrain.a(u, v));
            b2.push_back(terrain.b(u, v));
            c2.push_back(terrain.c(u, v) - terrain.a(u, v) * dx - terrain.b(u, v) * dy);
        }
    }
    const TerrainGrid moved(terrain.origin_x() + dx, terrain.origin_y() + dy, terrain.cell_size(),
                            terrain.n_cols(), terrain.n_rows(), std::move(a2), std::move(b2),
                            std::move(c2));
    AlignmentDesign shifted = d;
    shifted.start.x += dx;
    shifted.start.y += dy;
    shifted.end.x += dx;
    shifted.end.y += dy;
    for (double& x : shifted.ip_x) x += dx;
    for (double& y : shifted.ip_y) y += dy;
    ConstraintConfig shifted_config = config;
    for (IpBox& box : shifted_config.boxes) {
        box.x_lo += dx;
        box.x_hi += dx;
        box.y_lo += dy;
        box.y_hi += dy;
    }
    const HorizontalGeometry shifted_geom = build_horizontal(shifted);
    const ConstraintReport after =
        evaluate_constraints(shifted, shifted_geom, moved, shifted_config);
    CHECK(after.feasible == before.feasible);
    CHECK(after.worst == doctest::Approx(before.worst).epsilon(1e-9));
}

TEST_CASE("seeds pass every check and single-variable sweeps flip the right sign") {
    SyntheticTerrainSpec spec;
    spec.kind = TerrainKind::Hills;
    spec.width = 200.0;
    spec.height = 200.0;
    spec.cell_size = 10.0;
    spec.amplitude = 6.0;
    spec.wavelength = 80.0;
    spec.seed = 5;
    const TerrainGrid terrain = load_terrain(generate_raster(spec));

    ConstraintConfig config = wide_config(2);
    config.boxes[0] = {50.0, 90.0, 50.0, 90.0};
    config.boxes[1] = {110.0, 150.0, 110.0, 150.0};
    const Vec3 start{20.0, 20.0, terrain.ground_elevation(20.0, 20.0)};
    const Vec3 end{180.0, 180.0, terrain.ground_elevation(180.0, 180.0)};

    const AlignmentDesign seed =
        seed_alignment(terrain, start, end, {3, 3, 3}, config, 200.0);
    const HorizontalGeometry geom = build_horizontal(seed);
    const ConstraintReport report = evaluate_constraints(seed, geom, terrain, config);
    REQUIRE(report.feasible);

    // push one IP coordinate out of its box
    {
        AlignmentDesign bad = seed;
        bad.ip_x[0] = config.boxes[0].x_hi + 7.0;
        const auto violations = check_boxes(bad, config);
        CHECK(violations[0].value == doctest::Approx(7.0));
        CHECK(violations[2].value < 0.0);
    }
    // push one radius below the minimum
    {
        AlignmentDesign bad = seed;
        bad.radius[1] = config.min_radius - 4.0;
        const auto violations = check_radius(bad, config.min_radius);
        CHECK(violations[1].value == doctest::Approx(4.0));
        CHECK(violations[0].value <= 0.0);
    }
    // push one elevation out of the corridor
    {
        AlignmentDesign bad = seed;
        const ElevationLayout layout(bad.subdivisions);
        const auto idx = layout.index_of(1, 1);
        bad.elevations[static_cast<std::size_t>(idx)] += config.elevation_corridor + 5.0;
        const HorizontalGeometry g = build_horizontal(bad);
        const auto violations = check_elevation_corridor(bad, g, terrain, config.elevation_corridor);
        int positive = 0;
        for (const auto& v : violations) positive += v.value > 0.0;
        CHECK(positive == 1);
    }
}

TEST_CASE("config validation") {
    ConstraintConfig config = wide_config(2);
    CHECK_NOTHROW(config.validate(2));
    CHECK_THROWS_AS(config.validate(3), ConfigError);
    config.min_radius = 0.0;
    CHECK_THROWS_AS(config.validate(2), ConfigError);
}
