#include "roadalign/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "roadalign/errors.hpp"

namespace roadalign {

namespace {

// Angles below this are near U-turns: the tangent length blows up and the
// overlap constraint can never hold, so reject early with a clear error.
constexpr double kThetaMin = 1e-3;
// Central angles below this are treated as collinear (zero-length curve).
constexpr double kBetaCollinear = 1e-12;
constexpr double kCoincidentTol = 1e-12;

}  // namespace

void AlignmentDesign::validate() const {
    const std::size_t n = ip_count();
    if (n < 1) throw ConfigError("alignment needs at least one intersection point");
    if (ip_y.size() != n || radius.size() != n)
        throw ConfigError("ip_x, ip_y and radius must have equal length");
    if (subdivisions.size() != n + 1)
        throw ConfigError("subdivisions must have one entry per tangent (N+1)");
    for (int m : subdivisions)
        if (m < 1) throw ConfigError("every tangent needs at least one subdivision");
    for (double r : radius)
        if (!(r > 0.0)) throw ConfigError("curve radii must be positive");
    if (elevations.size() != elevation_count(subdivisions))
        throw ConfigError("elevation vector length disagrees with subdivision counts");
}

std::vector<double> AlignmentDesign::to_vector() const {
    std::vector<double> v;
    v.reserve(dimension());
    v.insert(v.end(), ip_x.begin(), ip_x.end());
    v.insert(v.end(), ip_y.begin(), ip_y.end());
    v.insert(v.end(), radius.begin(), radius.end());
    v.insert(v.end(), elevations.begin(), elevations.end());
    return v;
}

void AlignmentDesign::from_vector(const std::vector<double>& v) {
    if (v.size() != dimension()) throw ConfigError("decision vector has wrong dimension");
    const std::size_t n = ip_count();
    std::copy_n(v.begin(), n, ip_x.begin());
    std::copy_n(v.begin() + static_cast<long>(n), n, ip_y.begin());
    std::copy_n(v.begin() + static_cast<long>(2 * n), n, radius.begin());
    std::copy_n(v.begin() + static_cast<long>(3 * n), elevations.size(), elevations.begin());
}

std::size_t elevation_count(const std::vector<int>& subdivisions) {
    // all stations minus the two fixed terminals
    std::size_t total = 0;
    for (int m : subdivisions) total += static_cast<std::size_t>(m) + 1;
    return total - 2;
}

ElevationLayout::ElevationLayout(const std::vector<int>& subdivisions)
    : subdivisions_(subdivisions) {
    offsets_.resize(subdivisions_.size());
    std::size_t off = 0;
    for (std::size_t k = 0; k < subdivisions_.size(); ++k) {
        offsets_[k] = off;
        std::size_t vars = static_cast<std::size_t>(subdivisions_[k]) + 1;
        if (k == 0) vars -= 1;
        if (k + 1 == subdivisions_.size()) vars -= 1;
        off += vars;
    }
    total_ = off;
}

bool ElevationLayout::is_fixed(std::size_t tangent, int station) const {
    if (tangent == 0 && station == 0) return true;
    return tangent + 1 == subdivisions_.size() && station == subdivisions_.back();
}

long long ElevationLayout::index_of(std::size_t tangent, int station) const {
    if (tangent >= subdivisions_.size() || station < 0 || station > subdivisions_[tangent])
        throw GeometryError("station index out of range");
    if (is_fixed(tangent, station)) return -1;
    const std::size_t base = offsets_[tangent];
    // tangent 0 packs stations starting at j=1
    const int local = tangent == 0 ? station - 1 : station;
    return static_cast<long long>(base) + local;
}

double station_elevation(const AlignmentDesign& design, std::size_t tangent, int station) {
    ElevationLayout layout(design.subdivisions);
    const long long idx = layout.index_of(tangent, station);
    if (idx < 0) return tangent == 0 ? design.start.z : design.end.z;
    return design.elevations[static_cast<std::size_t>(idx)];
}

double deflection_angle(Vec2 ip_prev, Vec2 ip, Vec2 ip_next) {
    const Vec2 to_prev = ip_prev - ip;
    const Vec2 to_next = ip_next - ip;
    const double n1 = to_prev.norm();
    const double n2 = to_next.norm();
    if (n1 < kCoincidentTol || n2 < kCoincidentTol)
        throw GeometryError("coincident intersection points");
    double c = to_prev.dot(to_next) / (n1 * n2);
    c = std::clamp(c, -1.0, 1.0);
    const double theta = std::acos(c);
    if (theta < kThetaMin) {
        std::ostringstream msg;
        msg << "near U-turn at IP (" << ip.x << ", " << ip.y << "): deflection-complement angle "
            << theta << " below " << kThetaMin;
        throw GeometryError(msg.str());
    }
    return theta;
}

double curve_tangent_length(double theta, double r) {
    const double beta = kPi - theta;
    if (beta < kBetaCollinear) return 0.0;
    return r * (1.0 + std::cos(theta)) / std::sin(theta);
}

std::pair<Vec2, Vec2> transition_points(Vec2 ip_prev, Vec2 ip, Vec2 ip_next, double r) {
    const double theta = deflection_angle(ip_prev, ip, ip_next);
    const double len = curve_tangent_length(theta, r);
    const Vec2 tc = ip + len * (ip_prev - ip).normalized();
    const Vec2 ct = ip + len * (ip_next - ip).normalized();
    return {tc, ct};
}

namespace {

// Center via the tangency condition: perpendicular to the incoming leg at
// TC, on the turn side. Equivalent to walking r csc(theta/2) along the
// IP -> chord-midpoint ray but stays well-conditioned as the legs approach
// collinearity (where the midpoint offset cancels to rounding noise).
CurveGeometry build_curve(Vec2 ip_prev, Vec2 ip, Vec2 ip_next, double r) {
    CurveGeometry curve;
    curve.ip = ip;
    curve.radius = r;
    curve.theta = deflection_angle(ip_prev, ip, ip_next);
    curve.beta = kPi - curve.theta;
    const Vec2 unit_prev = (ip_prev - ip).normalized();
    const Vec2 unit_next = (ip_next - ip).normalized();
    const double turn = unit_prev.cross(unit_next);
    if (curve.beta < kBetaCollinear || turn == 0.0) {
        curve.degenerate = true;
        curve.beta = 0.0;
        curve.tangent_len = 0.0;
        curve.tc = curve.ct = curve.center = ip;
        return curve;
    }
    curve.tangent_len = curve_tangent_length(curve.theta, r);
    curve.tc = ip + curve.tangent_len * unit_prev;
    curve.ct = ip + curve.tangent_len * unit_next;
    const double side = turn < 0.0 ? 1.0 : -1.0;
    curve.center = curve.tc + (r * side) * Vec2{unit_prev.y, -unit_prev.x};
    curve.angle_tc = std::atan2(curve.tc.y - curve.center.y, curve.tc.x - curve.center.x);
    const double angle_ct_raw =
        std::atan2(curve.ct.y - curve.center.y, curve.ct.x - curve.center.x);
    // The central angle is beta < pi, so the wrapped difference is the arc's
    // signed sweep; unwrap so angle_ct - angle_tc carries it.
    curve.angle_ct = curve.angle_tc + wrap_angle(angle_ct_raw - curve.angle_tc);
    return curve;
}

}  // namespace

Vec2 curve_center(Vec2 ip_prev, Vec2 ip, Vec2 ip_next, double r) {
    const CurveGeometry curve = build_curve(ip_prev, ip, ip_next, r);
    if (curve.degenerate)
        throw GeometryError("collinear intersection points: curve has no center");
    return curve.center;
}

HorizontalGeometry build_horizontal(const AlignmentDesign& design) {
    design.validate();
    const std::size_t n = design.ip_count();

    std::vector<Vec2> nodes(n + 2);
    nodes[0] = design.start.plan();
    for (std::size_t k = 0; k < n; ++k) nodes[k + 1] = {design.ip_x[k], design.ip_y[k]};
    nodes[n + 1] = design.end.plan();

    HorizontalGeometry geom;
    geom.subdivisions = design.subdivisions;
    geom.curves.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        geom.curves.push_back(build_curve(nodes[k], nodes[k + 1], nodes[k + 2], design.radius[k]));

    geom.chord_start.resize(n + 1);
    geom.chord_end.resize(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        geom.chord_start[k] = k == 0 ? nodes[0] : geom.curves[k - 1].ct;
        geom.chord_end[k] = k == n ? nodes[n + 1] : geom.curves[k].tc;
    }
    return geom;
}

Vec2 station_coordinates(const HorizontalGeometry& geom, std::size_t tangent, int station) {
    if (tangent >= geom.chord_count()) throw GeometryError("tangent index out of range");
    const int m = geom.subdivisions[tangent];
    if (station < 0 || station > m) throw GeometryError("station index out of range");
    const double t = static_cast<double>(station) / static_cast<double>(m);
    const Vec2 p = geom.chord_start[tangent];
    const Vec2 q = geom.chord_end[tangent];
    return p + t * (q - p);
}

double station_spacing(const HorizontalGeometry& geom, std::size_t tangent) {
    return geom.chord_length(tangent) / static_cast<double>(geom.subdivisions[tangent]);
}

std::vector<SegmentRef> enumerate_segments(const AlignmentDesign& design,
                                           const HorizontalGeometry& geom) {
    std::vector<SegmentRef> out;
    for (std::size_t k = 0; k < design.tangent_count(); ++k) {
        for (int j = 1; j <= design.subdivisions[k]; ++j)
            out.push_back({SegmentRef::Kind::Tangent, k, j});
        if (k < geom.curve_count() && !geom.curves[k].degenerate)
            out.push_back({SegmentRef::Kind::Arc, k, 0});
    }
    return out;
}

std::pair<double, double> segment_domain(const HorizontalGeometry& geom, SegmentRef segment) {
    if (segment.kind == SegmentRef::Kind::Arc) return {0.0, 1.0};
    const double m = geom.subdivisions[segment.k];
    return {(segment.j - 1) / m, segment.j / m};
}

Vec3 centerline_point(const AlignmentDesign& design, const HorizontalGeometry& geom,
                      SegmentRef segment, double s) {
    const auto [lo, hi] = segment_domain(geom, segment);
    if (s < lo - 1e-12 || s > hi + 1e-12) throw GeometryError("parameter outside segment domain");

    if (segment.kind == SegmentRef::Kind::Tangent) {
        const std::size_t k = segment.k;
        const int j = segment.j;
        const double m = geom.subdivisions[k];
        const Vec2 p = geom.chord_start[k];
        const Vec2 q = geom.chord_end[k];
        const double z0 = station_elevation(design, k, j - 1);
        const double z1 = station_elevation(design, k, j);
        return {p.x + s * (q.x - p.x), p.y + s * (q.y - p.y), z0 + (z1 - z0) * (m * s + 1 - j)};
    }

    const CurveGeometry& curve = geom.curves[segment.k];
    const double z0 = station_elevation(design, segment.k, geom.subdivisions[segment.k]);
    const double z1 = station_elevation(design, segment.k + 1, 0);
    if (curve.degenerate) return {curve.ip.x, curve.ip.y, z0 + (z1 - z0) * s};
    const double angle = curve.angle_tc + curve.sweep() * s;
    return {curve.center.x + curve.radius * std::cos(angle),
            curve.center.y + curve.radius * std::sin(angle), z0 + (z1 - z0) * s};
}

}  // namespace roadalign
