#include "roadalign/constraints.hpp"

#include <algorithm>
#include <cmath>

#include "roadalign/errors.hpp"

namespace roadalign {

void ConstraintConfig::validate(std::size_t ip_count) const {
    if (boxes.size() != ip_count) throw ConfigError("need one IP box per intersection point");
    for (const IpBox& b : boxes)
        if (b.x_lo > b.x_hi || b.y_lo > b.y_hi) throw ConfigError("IP box bounds are inverted");
    if (!(min_radius > 0)) throw ConfigError("min_radius must be positive");
    if (!(max_grade > 0)) throw ConfigError("max_grade must be positive");
    if (elevation_corridor < 0) throw ConfigError("elevation corridor must be non-negative");
}

std::string to_string(ConstraintFamily family) {
    switch (family) {
        case ConstraintFamily::Box: return "ip_box";
        case ConstraintFamily::CurveOverlap: return "curve_overlap";
        case ConstraintFamily::MinRadius: return "min_radius";
        case ConstraintFamily::MaxGrade: return "max_grade";
        case ConstraintFamily::ElevationCorridor: return "elevation_corridor";
    }
    return "?";
}

std::vector<ConstraintViolation> check_overlap(const HorizontalGeometry& geom) {
    // tangent length consumed at each chord end; the terminals consume none
    const std::size_t n = geom.curve_count();
    std::vector<ConstraintViolation> out;
    out.reserve(n + 1);
    for (std::size_t chord = 0; chord <= n; ++chord) {
        const double at_start = chord == 0 ? 0.0 : geom.curves[chord - 1].tangent_len;
        const double at_end = chord == n ? 0.0 : geom.curves[chord].tangent_len;
        Vec2 a = chord == 0 ? geom.chord_start[0] : geom.curves[chord - 1].ip;
        Vec2 b = chord == n ? geom.chord_end[n] : geom.curves[chord].ip;
        out.push_back({ConstraintFamily::CurveOverlap, chord,
                       at_start + at_end - distance(a, b)});
    }
    return out;
}

std::vector<ConstraintViolation> check_radius(const AlignmentDesign& design, double min_radius) {
    std::vector<ConstraintViolation> out;
    out.reserve(design.ip_count());
    for (std::size_t k = 0; k < design.ip_count(); ++k)
        out.push_back({ConstraintFamily::MinRadius, k, min_radius - design.radius[k]});
    return out;
}

std::vector<ConstraintViolation> check_grade(const AlignmentDesign& design,
                                             const HorizontalGeometry& geom, double max_grade) {
    std::vector<ConstraintViolation> out;
    std::size_t ordinal = 0;
    for (std::size_t k = 0; k < design.tangent_count(); ++k) {
        const double spacing = station_spacing(geom, k);
        for (int j = 1; j <= design.subdivisions[k]; ++j) {
            const double dz =
                std::abs(station_elevation(design, k, j) - station_elevation(design, k, j - 1));
            out.push_back({ConstraintFamily::MaxGrade, ordinal++, dz - spacing * max_grade});
        }
        if (k < geom.curve_count()) {
            const CurveGeometry& curve = geom.curves[k];
            const double run = curve.degenerate ? 0.0 : curve.radius * std::abs(curve.sweep());
            const double dz = std::abs(station_elevation(design, k + 1, 0) -
                                       station_elevation(design, k, design.subdivisions[k]));
            out.push_back({ConstraintFamily::MaxGrade, ordinal++, dz - run * max_grade});
        }
    }
    return out;
}

std::vector<ConstraintViolation> check_elevation_corridor(const AlignmentDesign& design,
                                                          const HorizontalGeometry& geom,
                                                          const TerrainGrid& terrain,
                                                          double corridor) {
    std::vector<ConstraintViolation> out;
    std::size_t ordinal = 0;
    for (std::size_t k = 0; k < design.tangent_count(); ++k) {
        for (int j = 0; j <= design.subdivisions[k]; ++j) {
            const Vec2 p = station_coordinates(geom, k, j);
            const double ground = terrain.ground_elevation(p.x, p.y);
            const double offset = std::abs(station_elevation(design, k, j) - ground);
            out.push_back({ConstraintFamily::ElevationCorridor, ordinal++, offset - corridor});
        }
    }
    return out;
}

std::vector<ConstraintViolation> check_boxes(const AlignmentDesign& design,
                                             const ConstraintConfig& config) {
    std::vector<ConstraintViolation> out;
    out.reserve(2 * design.ip_count());
    for (std::size_t k = 0; k < design.ip_count(); ++k) {
        const IpBox& box = config.boxes[k];
        out.push_back({ConstraintFamily::Box, 2 * k,
                       std::max(box.x_lo - design.ip_x[k], design.ip_x[k] - box.x_hi)});
        out.push_back({ConstraintFamily::Box, 2 * k + 1,
                       std::max(box.y_lo - design.ip_y[k], design.ip_y[k] - box.y_hi)});
    }
    return out;
}

ConstraintReport aggregate(std::vector<ConstraintViolation> violations) {
    ConstraintReport report;
    report.worst = -std::numeric_limits<double>::infinity();
    for (const ConstraintViolation& v : violations) report.worst = std::max(report.worst, v.value);
    if (violations.empty()) report.worst = 0.0;
    report.feasible = report.worst <= kFeasibilityTol;
    report.violations = std::move(violations);
    return report;
}

ConstraintReport evaluate_constraints(const AlignmentDesign& design,
                                      const HorizontalGeometry& geom, const TerrainGrid& terrain,
                                      const ConstraintConfig& config) {
    config.validate(design.ip_count());
    std::vector<ConstraintViolation> all = check_boxes(design, config);
    auto append = [&all](std::vector<ConstraintViolation> v) {
        all.insert(all.end(), v.begin(), v.end());
    };
    append(check_overlap(geom));
    append(check_radius(design, config.min_radius));
    append(check_grade(design, geom, config.max_grade));
    append(check_elevation_corridor(design, geom, terrain, config.elevation_corridor));
    return aggregate(std::move(all));
}

double penalty(const ConstraintReport& report, double weight) {
    double acc = 0.0;
    for (const ConstraintViolation& v : report.violations) {
        const double excess = std::max(0.0, v.value);
        acc += excess * excess;
    }
    return weight * acc;
}

}  // namespace roadalign
