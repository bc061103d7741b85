#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "roadalign/geometry.hpp"

namespace roadalign {

// Decision variables of one candidate road: N intersection points with curve
// radii plus M station elevations. start/end are fixed terminals, not
// variables. subdivisions[k] is the station count m_k of horizontal tangent k
// (there are N+1 tangents).
struct AlignmentDesign {
    Vec3 start;
    Vec3 end;
    std::vector<double> ip_x;        // N
    std::vector<double> ip_y;        // N
    std::vector<double> radius;      // N
    std::vector<double> elevations;  // M, see ElevationLayout
    std::vector<int> subdivisions;   // N+1, each >= 1

    std::size_t ip_count() const { return ip_x.size(); }
    std::size_t tangent_count() const { return subdivisions.size(); }

    // Throws if the structural invariants fail (sizes, positivity).
    void validate() const;

    std::size_t dimension() const { return 3 * ip_count() + elevations.size(); }
    std::vector<double> to_vector() const;
    void from_vector(const std::vector<double>& v);
};

// M = m_0 + m_N + sum_{k=1}^{N-1} (m_k + 1): every station owns an elevation
// variable except the fixed start and end.
std::size_t elevation_count(const std::vector<int>& subdivisions);

// Maps station (k, j) to its slot in AlignmentDesign::elevations.
// Station (0,0) is the fixed start, (N, m_N) the fixed end.
class ElevationLayout {
public:
    explicit ElevationLayout(const std::vector<int>& subdivisions);

    std::size_t total() const { return total_; }
    // -1 for the two fixed stations
    long long index_of(std::size_t tangent, int station) const;
    bool is_fixed(std::size_t tangent, int station) const;

private:
    std::vector<int> subdivisions_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
};

// Elevation at station (k, j), resolving the fixed terminals.
double station_elevation(const AlignmentDesign& design, std::size_t tangent, int station);

// Derived horizontal geometry for one curve (per IP).
struct CurveGeometry {
    double theta = 0.0;        // angle between the two IP legs, (0, pi]
    double beta = 0.0;         // central arc angle, pi - theta
    double tangent_len = 0.0;  // distance IP -> TC (= IP -> CT)
    double radius = 0.0;
    Vec2 ip;
    Vec2 tc;      // transition on the incoming chord
    Vec2 ct;      // transition on the outgoing chord
    Vec2 center;  // arc center; meaningless when degenerate
    double angle_tc = 0.0;  // atan2 of (TC - C)
    double angle_ct = 0.0;  // angle_tc + signed sweep (unwrapped)
    bool degenerate = false;  // collinear IP: zero-length curve, no arc

    double sweep() const { return angle_ct - angle_tc; }  // signed, |sweep| = beta
};

// Full horizontal geometry: N curves and the N+1 tangent chords joining them.
// Chord k runs from CT_{k-1} (start for k=0) to TC_k (end for k=N).
struct HorizontalGeometry {
    std::vector<CurveGeometry> curves;
    std::vector<Vec2> chord_start;  // N+1
    std::vector<Vec2> chord_end;    // N+1
    std::vector<int> subdivisions;  // copied from the design

    std::size_t curve_count() const { return curves.size(); }
    std::size_t chord_count() const { return chord_start.size(); }
    double chord_length(std::size_t k) const { return distance(chord_start[k], chord_end[k]); }
};

// Angle at `ip` between the legs toward its neighbours, arccos of the
// normalized dot product (clamped to [-1,1]). Throws GeometryError for
// coincident points or near-U-turn angles below theta_min.
double deflection_angle(Vec2 ip_prev, Vec2 ip, Vec2 ip_next);

// r (1+cos theta)/sin theta, the distance from the IP to each transition
// point; equals r tan(beta/2).
double curve_tangent_length(double theta, double r);

// TC on the segment toward ip_prev, CT toward ip_next, both at
// curve_tangent_length from ip. Collinear neighbours give TC = CT = ip.
std::pair<Vec2, Vec2> transition_points(Vec2 ip_prev, Vec2 ip, Vec2 ip_next, double r);

// Arc center: equidistant (= r) from TC and CT along the IP -> midpoint ray.
// Throws GeometryError when the IPs are collinear (no curve exists).
Vec2 curve_center(Vec2 ip_prev, Vec2 ip, Vec2 ip_next, double r);

// Derives every curve and chord of the design.
HorizontalGeometry build_horizontal(const AlignmentDesign& design);

// Station (k, j): linear interpolation at fraction j/m_k along chord k.
Vec2 station_coordinates(const HorizontalGeometry& geom, std::size_t tangent, int station);

// Horizontal spacing between consecutive stations of tangent k.
double station_spacing(const HorizontalGeometry& geom, std::size_t tangent);

// One parametrized piece of the 3D centerline.
struct SegmentRef {
    enum class Kind { Tangent, Arc };
    Kind kind = Kind::Tangent;
    std::size_t k = 0;  // tangent index (0..N) or curve index (0..N-1)
    int j = 1;          // tangent sub-segment, 1..m_k; unused for arcs
};

// All segments in travel order: tangent 0 pieces, arc 0, tangent 1 pieces, ...
// Degenerate curves are skipped (their arcs have zero length).
std::vector<SegmentRef> enumerate_segments(const AlignmentDesign& design,
                                           const HorizontalGeometry& geom);

// Point on the centerline. Tangent pieces take s in [(j-1)/m_k, j/m_k] and are
// linear in all coordinates; arcs take s in [0,1], circular in plan with z
// linear between the adjacent station elevations.
Vec3 centerline_point(const AlignmentDesign& design, const HorizontalGeometry& geom,
                      SegmentRef segment, double s);

// Parameter domain of a segment.
std::pair<double, double> segment_domain(const HorizontalGeometry& geom, SegmentRef segment);

}  // namespace roadalign
