#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "roadalign/alignment.hpp"
#include "roadalign/terrain.hpp"

namespace roadalign {

// Unit costs and cross-section shape. kappa = cot(theta1) + cot(theta2) for
// the trapezoid side slopes. borrow_cost, when set, splits the unbalanced
// material term into borrow (fill excess) and waste (cut excess).
struct CostParameters {
    double cut_cost = 4.0;      // per m^3
    double fill_cost = 2.0;     // per m^3
    double waste_cost = 8.0;    // per m^3
    double utility_cost = 1.2;  // per m
    double width = 5.0;         // m
    double side_slope_sum = 1.0;
    std::optional<double> borrow_cost;
    double shrink_factor = 1.0;  // multiplies total cut volume

    void validate() const;
};

// Straight centerline piece between stations (k, j-1) and (k, j), expressed
// in the whole-chord parameter s in [(j-1)/m, j/m].
struct TangentSubSegment {
    Vec2 chord_start;  // CT_{k-1} (or the start terminal)
    Vec2 chord_end;    // TC_k (or the end terminal)
    int m = 1;
    int j = 1;
    double z0 = 0.0;  // elevation at station j-1
    double z1 = 0.0;  // elevation at station j

    double s_lo() const { return static_cast<double>(j - 1) / m; }
    double s_hi() const { return static_cast<double>(j) / m; }
    Vec2 plan_at(double s) const { return chord_start + s * (chord_end - chord_start); }
    double road_z(double s) const { return z0 + (z1 - z0) * (m * s + 1 - j); }
    Vec3 point_at(double s) const {
        Vec2 p = plan_at(s);
        return {p.x, p.y, road_z(s)};
    }
};

// Circular centerline piece between the flanking tangents' end stations.
struct ArcSegment {
    Vec2 center;
    double radius = 0.0;
    double angle0 = 0.0;  // angle at TC
    double angle1 = 0.0;  // angle at CT, unwrapped (|angle1-angle0| <= pi)
    double z0 = 0.0;
    double z1 = 0.0;

    double sweep() const { return angle1 - angle0; }
    double angle_at(double s) const { return angle0 + sweep() * s; }
    Vec2 plan_at(double s) const {
        const double a = angle_at(s);
        return {center.x + radius * std::cos(a), center.y + radius * std::sin(a)};
    }
    double road_z(double s) const { return z0 + (z1 - z0) * s; }
    Vec3 point_at(double s) const {
        Vec2 p = plan_at(s);
        return {p.x, p.y, road_z(s)};
    }
};

TangentSubSegment make_tangent_subsegment(const AlignmentDesign& design,
                                          const HorizontalGeometry& geom, std::size_t tangent,
                                          int j);
ArcSegment make_arc_segment(const AlignmentDesign& design, const HorizontalGeometry& geom,
                            std::size_t curve);

enum class CrossingCause { Endpoint, XBoundary, YBoundary, CutFillTransition };

struct Crossing {
    double s = 0.0;
    CrossingCause cause = CrossingCause::Endpoint;
};

// Sorted parameters where the segment crosses a grid line or the cut/fill
// state flips, plus the active cell on each open interval between them.
struct SegmentCrossings {
    struct Interval {
        double s0 = 0.0;
        double s1 = 0.0;
        std::size_t cell_u = 0;
        std::size_t cell_v = 0;
    };
    std::vector<Crossing> crossings;
    std::vector<Interval> intervals;
};

struct VolumePair {
    double cut = 0.0;
    double fill = 0.0;
};

SegmentCrossings tangent_crossings(const TangentSubSegment& seg, const TerrainGrid& terrain);
SegmentCrossings arc_crossings(const ArcSegment& seg, const TerrainGrid& terrain);

// Closed-form cut/fill volumes per bracketed interval (trapezoidal
// cross-section swept along the segment).
VolumePair tangent_cut_fill(const TangentSubSegment& seg, const TerrainGrid& terrain,
                            const CostParameters& params);
VolumePair arc_cut_fill(const ArcSegment& seg, const TerrainGrid& terrain,
                        const CostParameters& params);

// 3D Euclidean length of the station-to-station line.
double segment_length(const TangentSubSegment& seg);
// sqrt((r * sweep)^2 + dz^2)
double arc_length(const ArcSegment& seg);

struct SegmentCost {
    SegmentRef ref;
    double cut = 0.0;
    double fill = 0.0;
    double length = 0.0;
};

struct CostBreakdown {
    double cut_volume = 0.0;   // after shrink factor
    double fill_volume = 0.0;
    double length = 0.0;
    double earthwork_cost = 0.0;
    double utility_cost = 0.0;
    std::vector<SegmentCost> segments;
};

// Sums volumes and lengths over every tangent sub-segment and arc, then
// applies the costing parameters. Defined on the constraint-relaxed set;
// throws OutOfBoundsError if the centerline leaves the terrain footprint.
CostBreakdown evaluate_costs(const AlignmentDesign& design, const HorizontalGeometry& geom,
                             const TerrainGrid& terrain, const CostParameters& params);

}  // namespace roadalign
