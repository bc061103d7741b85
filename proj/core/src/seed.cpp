#include "roadalign/seed.hpp"

#include <algorithm>
#include <cmath>

#include "roadalign/errors.hpp"

namespace roadalign {

namespace {

struct StationWalk {
    std::vector<double> cumulative;  // horizontal distance from start
    std::vector<double> ground;
    std::vector<Vec2> plan;
};

StationWalk walk_stations(const HorizontalGeometry& geom, const TerrainGrid& terrain) {
    StationWalk walk;
    double s = 0.0;
    for (std::size_t k = 0; k < geom.chord_count(); ++k) {
        const double spacing = station_spacing(geom, k);
        for (int j = 0; j <= geom.subdivisions[k]; ++j) {
            if (j > 0) s += spacing;
            if (j == 0 && k > 0) {
                const CurveGeometry& c = geom.curves[k - 1];
                s += c.degenerate ? 0.0 : c.radius * std::abs(c.sweep());
            }
            const Vec2 p = station_coordinates(geom, k, j);
            walk.cumulative.push_back(s);
            walk.plan.push_back(p);
            walk.ground.push_back(terrain.ground_elevation(p.x, p.y));
        }
    }
    return walk;
}

}  // namespace

AlignmentDesign seed_alignment(const TerrainGrid& terrain, Vec3 start, Vec3 end,
                               const std::vector<int>& subdivisions,
                               const ConstraintConfig& config, double max_radius) {
    const std::size_t n = config.boxes.size();
    if (n < 1) throw SeedingError("seeding needs at least one IP box");
    if (subdivisions.size() != n + 1)
        throw SeedingError("subdivision count must be one more than the IP count");
    config.validate(n);

    AlignmentDesign design;
    design.start = start;
    design.end = end;
    design.subdivisions = subdivisions;
    design.ip_x.resize(n);
    design.ip_y.resize(n);
    design.radius.resize(n);
    design.elevations.assign(elevation_count(subdivisions), 0.0);

    // IPs equally spaced on the start-end line unless a box excludes the line
    const Vec2 s_h = start.plan();
    const Vec2 e_h = end.plan();
    for (std::size_t k = 0; k < n; ++k) {
        const double f = static_cast<double>(k + 1) / static_cast<double>(n + 1);
        Vec2 p = s_h + f * (e_h - s_h);
        const IpBox& box = config.boxes[k];
        if (p.x < box.x_lo || p.x > box.x_hi || p.y < box.y_lo || p.y > box.y_hi)
            p = {0.5 * (box.x_lo + box.x_hi), 0.5 * (box.y_lo + box.y_hi)};
        design.ip_x[k] = p.x;
        design.ip_y[k] = p.y;
    }

    // radii: a fraction of the neighbour spacing, shrunk until curves fit
    std::vector<Vec2> nodes(n + 2);
    nodes[0] = s_h;
    for (std::size_t k = 0; k < n; ++k) nodes[k + 1] = {design.ip_x[k], design.ip_y[k]};
    nodes[n + 1] = e_h;
    for (std::size_t k = 0; k < n; ++k) {
        const double spacing =
            std::min(distance(nodes[k], nodes[k + 1]), distance(nodes[k + 1], nodes[k + 2]));
        design.radius[k] = std::clamp(0.2 * spacing, config.min_radius, max_radius);
    }

    HorizontalGeometry geom;
    for (int round = 0;; ++round) {
        try {
            geom = build_horizontal(design);
        } catch (const GeometryError& err) {
            throw SeedingError(std::string("seed geometry is degenerate: ") + err.what());
        }
        bool overlapping = false;
        bool shrunk = false;
        for (const ConstraintViolation& v : check_overlap(geom)) {
            if (v.value <= kFeasibilityTol) continue;
            overlapping = true;
            // shrink the curves at both ends of the offending chord
            for (std::size_t k : {v.index, v.index - 1}) {
                if (k >= n) continue;  // terminal ends have no curve
                if (design.radius[k] > config.min_radius) {
                    design.radius[k] = std::max(config.min_radius, 0.7 * design.radius[k]);
                    shrunk = true;
                }
            }
        }
        if (!overlapping) break;
        if (!shrunk || round > 60)
            throw SeedingError("seed violates curve_overlap even at the minimum radius");
    }

    // elevations: follow the ground, clipped into the grade-feasible band
    // anchored at the fixed terminals, then grade-limited station to station
    StationWalk walk = walk_stations(geom, terrain);
    const std::size_t count = walk.cumulative.size();
    const double total = walk.cumulative.back();
    const double grade = config.max_grade;
    if (std::abs(end.z - start.z) > total * grade + kFeasibilityTol)
        throw SeedingError("seed violates max_grade: terminals too steep to connect");

    std::vector<double> z(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double s = walk.cumulative[i];
        const double hi = std::min(start.z + s * grade, end.z + (total - s) * grade);
        const double lo = std::max(start.z - s * grade, end.z - (total - s) * grade);
        z[i] = std::clamp(walk.ground[i], lo, hi);
    }
    for (std::size_t i = 1; i < count; ++i) {
        const double window = (walk.cumulative[i] - walk.cumulative[i - 1]) * grade;
        z[i] = std::clamp(z[i], z[i - 1] - window, z[i - 1] + window);
    }
    for (std::size_t i = count - 1; i-- > 0;) {
        const double window = (walk.cumulative[i + 1] - walk.cumulative[i]) * grade;
        z[i] = std::clamp(z[i], z[i + 1] - window, z[i + 1] + window);
    }

    const ElevationLayout layout(subdivisions);
    std::size_t station = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        for (int j = 0; j <= subdivisions[k]; ++j, ++station) {
            const long long idx = layout.index_of(k, j);
            if (idx >= 0) design.elevations[static_cast<std::size_t>(idx)] = z[station];
        }
    }

    const ConstraintReport report = evaluate_constraints(design, geom, terrain, config);
    if (!report.feasible) {
        const ConstraintViolation* worst = nullptr;
        for (const ConstraintViolation& v : report.violations)
            if (!worst || v.value > worst->value) worst = &v;
        throw SeedingError("seed violates " + to_string(worst->family) + " by " +
                           std::to_string(worst->value));
    }
    return design;
}

}  // namespace roadalign
