#include "roadalign/costing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "roadalign/errors.hpp"

namespace roadalign {

namespace {

constexpr double kParamTol = 1e-12;   // dedupe tolerance on s
constexpr int kSignScanPoints = 32;   // per-cell scan for arc cut/fill roots

void sort_dedupe(std::vector<Crossing>& crossings) {
    std::sort(crossings.begin(), crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.s < b.s; });
    std::vector<Crossing> out;
    for (const Crossing& c : crossings) {
        if (out.empty() || c.s - out.back().s > kParamTol)
            out.push_back(c);
    }
    crossings = std::move(out);
}

// Integral of (W*h + kappa/2 h^2) ds for linear h = om + th*s.
double linear_section_volume(double width, double kappa, double om, double th, double s0,
                             double s1) {
    const double d1 = s1 - s0;
    const double d2 = s1 * s1 - s0 * s0;
    const double d3 = s1 * s1 * s1 - s0 * s0 * s0;
    return (width * om + 0.5 * kappa * om * om) * d1 +
           0.5 * (width * th + kappa * om * th) * d2 + kappa / 6.0 * th * th * d3;
}

// Grid lines strictly inside (lo, hi); returns the line ordinates.
std::vector<double> lines_between(double lo, double hi, double origin, double step,
                                  std::size_t count) {
    std::vector<double> out;
    if (hi < lo) std::swap(lo, hi);
    auto first = static_cast<long long>(std::ceil((lo - origin) / step));
    auto last = static_cast<long long>(std::floor((hi - origin) / step));
    first = std::max(first, 0LL);
    last = std::min(last, static_cast<long long>(count));
    for (long long i = first; i <= last; ++i)
        out.push_back(origin + step * static_cast<double>(i));
    return out;
}

// Linear ground-minus-road coefficients (h = om + th*s) for a tangent piece
// inside one grid cell.
void tangent_h_coefficients(const TangentSubSegment& seg, const TerrainGrid& terrain,
                            std::size_t u, std::size_t v, double& om, double& th) {
    const double a = terrain.a(u, v);
    const double b = terrain.b(u, v);
    const double c = terrain.c(u, v);
    const double dx = seg.chord_end.x - seg.chord_start.x;
    const double dy = seg.chord_end.y - seg.chord_start.y;
    om = a * seg.chord_start.x + b * seg.chord_start.y + c -
         (seg.z0 + (seg.z1 - seg.z0) * (1 - seg.j));
    th = a * dx + b * dy - seg.m * (seg.z1 - seg.z0);
}

// h(s) = alpha + b cos(theta(s)) + c sin(theta(s)) + d s on an arc in one cell.
struct ArcH {
    double alpha, b, c, d;
    double angle0, omega;

    double operator()(double s) const {
        const double th = angle0 + omega * s;
        return alpha + b * std::cos(th) + c * std::sin(th) + d * s;
    }
};

ArcH arc_h_coefficients(const ArcSegment& seg, const TerrainGrid& terrain, std::size_t u,
                        std::size_t v) {
    const double a = terrain.a(u, v);
    const double b = terrain.b(u, v);
    const double c = terrain.c(u, v);
    return {a * seg.center.x + b * seg.center.y + c - seg.z0,
            a * seg.radius,
            b * seg.radius,
            -(seg.z1 - seg.z0),
            seg.angle0,
            seg.sweep()};
}

// Antiderivative of h(s) for the arc form.
double arc_h_integral(const ArcH& h, double s) {
    const double th = h.angle0 + h.omega * s;
    return h.alpha * s + 0.5 * h.d * s * s +
           (h.b * std::sin(th) - h.c * std::cos(th)) / h.omega;
}

// Antiderivative of h(s)^2 for the arc form.
double arc_h2_integral(const ArcH& h, double s) {
    const double th = h.angle0 + h.omega * s;
    const double sn = std::sin(th), cs = std::cos(th);
    const double sn2 = std::sin(2.0 * th), cs2 = std::cos(2.0 * th);
    const double w = h.omega;
    double acc = h.alpha * h.alpha * s;
    acc += (h.b * h.b + h.c * h.c) * 0.5 * s + (h.b * h.b - h.c * h.c) * sn2 / (4.0 * w);
    acc += h.d * h.d * s * s * s / 3.0;
    acc += 2.0 * h.alpha * h.b * sn / w - 2.0 * h.alpha * h.c * cs / w;
    acc += h.alpha * h.d * s * s;
    acc -= h.b * h.c * cs2 / (2.0 * w);
    acc += 2.0 * h.b * h.d * (s * sn / w + cs / (w * w));
    acc += 2.0 * h.c * h.d * (-s * cs / w + sn / (w * w));
    return acc;
}

// Closed-form integral of (W h + kappa/2 h^2) ds over [s0, s1] for the arc
// form, sign-flipped for fill via negate.
double arc_section_volume(const ArcH& h, double width, double kappa, bool negate, double s0,
                          double s1) {
    ArcH g = h;
    if (negate) {
        g.alpha = -g.alpha;
        g.b = -g.b;
        g.c = -g.c;
        g.d = -g.d;
    }
    if (std::abs(g.omega) < 1e-14) {
        // zero-sweep limit: h is linear in s
        const double om = g.alpha + g.b * std::cos(g.angle0) + g.c * std::sin(g.angle0);
        return linear_section_volume(width, kappa, om, g.d, s0, s1);
    }
    const double h1 = arc_h_integral(g, s1) - arc_h_integral(g, s0);
    const double h2 = arc_h2_integral(g, s1) - arc_h2_integral(g, s0);
    return width * h1 + 0.5 * kappa * h2;
}

void build_intervals(SegmentCrossings& out, const TerrainGrid& terrain,
                     const std::function<Vec2(double)>& plan_at) {
    out.intervals.clear();
    for (std::size_t i = 0; i + 1 < out.crossings.size(); ++i) {
        const double s0 = out.crossings[i].s;
        const double s1 = out.crossings[i + 1].s;
        if (s1 - s0 <= kParamTol) continue;
        const Vec2 mid = plan_at(0.5 * (s0 + s1));
        auto [u, v] = terrain.cell_of(mid.x, mid.y);
        out.intervals.push_back({s0, s1, u, v});
    }
}

}  // namespace

void CostParameters::validate() const {
    if (cut_cost < 0 || fill_cost < 0 || waste_cost < 0 || utility_cost < 0)
        throw ConfigError("unit costs must be non-negative");
    if (borrow_cost && *borrow_cost < 0) throw ConfigError("borrow cost must be non-negative");
    if (!(width > 0)) throw ConfigError("road width must be positive");
    if (side_slope_sum < 0) throw ConfigError("side slope sum must be non-negative");
    if (!(shrink_factor > 0)) throw ConfigError("shrink factor must be positive");
}

TangentSubSegment make_tangent_subsegment(const AlignmentDesign& design,
                                          const HorizontalGeometry& geom, std::size_t tangent,
                                          int j) {
    TangentSubSegment seg;
    seg.chord_start = geom.chord_start[tangent];
    seg.chord_end = geom.chord_end[tangent];
    seg.m = geom.subdivisions[tangent];
    seg.j = j;
    seg.z0 = station_elevation(design, tangent, j - 1);
    seg.z1 = station_elevation(design, tangent, j);
    return seg;
}

ArcSegment make_arc_segment(const AlignmentDesign& design, const HorizontalGeometry& geom,
                            std::size_t curve) {
    const CurveGeometry& c = geom.curves[curve];
    ArcSegment seg;
    seg.center = c.center;
    seg.radius = c.radius;
    seg.angle0 = c.angle_tc;
    seg.angle1 = c.angle_ct;
    seg.z0 = station_elevation(design, curve, geom.subdivisions[curve]);
    seg.z1 = station_elevation(design, curve + 1, 0);
    return seg;
}

SegmentCrossings tangent_crossings(const TangentSubSegment& seg, const TerrainGrid& terrain) {
    const double s_lo = seg.s_lo();
    const double s_hi = seg.s_hi();
    const Vec2 p0 = seg.plan_at(s_lo);
    const Vec2 p1 = seg.plan_at(s_hi);
    const double dx = seg.chord_end.x - seg.chord_start.x;
    const double dy = seg.chord_end.y - seg.chord_start.y;

    SegmentCrossings out;
    out.crossings.push_back({s_lo, CrossingCause::Endpoint});
    out.crossings.push_back({s_hi, CrossingCause::Endpoint});

    if (std::abs(dx) > 0) {
        for (double x : lines_between(p0.x, p1.x, terrain.origin_x(), terrain.cell_size(),
                                      terrain.n_cols())) {
            const double s = (x - seg.chord_start.x) / dx;
            if (s > s_lo + kParamTol && s < s_hi - kParamTol)
                out.crossings.push_back({s, CrossingCause::XBoundary});
        }
    }
    if (std::abs(dy) > 0) {
        for (double y : lines_between(p0.y, p1.y, terrain.origin_y(), terrain.cell_size(),
                                      terrain.n_rows())) {
            const double s = (y - seg.chord_start.y) / dy;
            if (s > s_lo + kParamTol && s < s_hi - kParamTol)
                out.crossings.push_back({s, CrossingCause::YBoundary});
        }
    }
    sort_dedupe(out.crossings);

    auto plan = [&seg](double s) { return seg.plan_at(s); };
    build_intervals(out, terrain, plan);

    // cut/fill transition: linear root of h inside each cell interval
    std::vector<Crossing> transitions;
    for (const auto& iv : out.intervals) {
        double om, th;
        tangent_h_coefficients(seg, terrain, iv.cell_u, iv.cell_v, om, th);
        if (th != 0.0) {
            const double root = -om / th;
            if (root > iv.s0 + kParamTol && root < iv.s1 - kParamTol)
                transitions.push_back({root, CrossingCause::CutFillTransition});
        }
    }
    if (!transitions.empty()) {
        out.crossings.insert(out.crossings.end(), transitions.begin(), transitions.end());
        sort_dedupe(out.crossings);
        build_intervals(out, terrain, plan);
    }
    return out;
}

SegmentCrossings arc_crossings(const ArcSegment& seg, const TerrainGrid& terrain) {
    const double a0 = seg.angle0;
    const double omega = seg.sweep();
    const double th_min = std::min(a0, seg.angle1);
    const double th_max = std::max(a0, seg.angle1);

    SegmentCrossings out;
    out.crossings.push_back({0.0, CrossingCause::Endpoint});
    out.crossings.push_back({1.0, CrossingCause::Endpoint});

    // extremes of cos/sin over the swept angle range give the plan bbox
    auto extreme = [&](double target) {
        // does an angle congruent to target (mod 2pi) fall inside the sweep?
        const double n = std::ceil((th_min - target) / (2.0 * kPi));
        return target + 2.0 * kPi * n <= th_max;
    };
    double cos_max = std::max(std::cos(th_min), std::cos(th_max));
    double cos_min = std::min(std::cos(th_min), std::cos(th_max));
    if (extreme(0.0)) cos_max = 1.0;
    if (extreme(kPi)) cos_min = -1.0;
    double sin_max = std::max(std::sin(th_min), std::sin(th_max));
    double sin_min = std::min(std::sin(th_min), std::sin(th_max));
    if (extreme(kPi / 2.0)) sin_max = 1.0;
    if (extreme(-kPi / 2.0)) sin_min = -1.0;

    auto add_angle_candidates = [&](double base, CrossingCause cause) {
        const auto n_lo = static_cast<long long>(std::ceil((th_min - base) / (2.0 * kPi)));
        const auto n_hi = static_cast<long long>(std::floor((th_max - base) / (2.0 * kPi)));
        for (long long n = n_lo; n <= n_hi; ++n) {
            const double angle = base + 2.0 * kPi * static_cast<double>(n);
            const double s = (angle - a0) / omega;
            if (s > kParamTol && s < 1.0 - kParamTol) out.crossings.push_back({s, cause});
        }
    };

    if (std::abs(omega) > 0) {
        for (double x : lines_between(seg.center.x + seg.radius * cos_min,
                                      seg.center.x + seg.radius * cos_max, terrain.origin_x(),
                                      terrain.cell_size(), terrain.n_cols())) {
            const double c = (x - seg.center.x) / seg.radius;
            if (std::abs(c) > 1.0) continue;
            const double phi = std::acos(c);
            add_angle_candidates(phi, CrossingCause::XBoundary);
            add_angle_candidates(-phi, CrossingCause::XBoundary);
        }
        for (double y : lines_between(seg.center.y + seg.radius * sin_min,
                                      seg.center.y + seg.radius * sin_max, terrain.origin_y(),
                                      terrain.cell_size(), terrain.n_rows())) {
            const double c = (y - seg.center.y) / seg.radius;
            if (std::abs(c) > 1.0) continue;
            const double phi = std::asin(c);
            add_angle_candidates(phi, CrossingCause::YBoundary);
            add_angle_candidates(kPi - phi, CrossingCause::YBoundary);
        }
    }
    sort_dedupe(out.crossings);

    auto plan = [&seg](double s) { return seg.plan_at(s); };
    build_intervals(out, terrain, plan);

    // cut/fill roots: h is trigonometric, so scan each cell interval for sign
    // changes (several per cell are possible) and bisect each bracket
    std::vector<Crossing> transitions;
    for (const auto& iv : out.intervals) {
        const ArcH h = arc_h_coefficients(seg, terrain, iv.cell_u, iv.cell_v);
        double prev_s = iv.s0;
        double prev_h = h(prev_s);
        for (int i = 1; i < kSignScanPoints; ++i) {
            const double t = iv.s0 + (iv.s1 - iv.s0) * i / (kSignScanPoints - 1);
            const double ht = h(t);
            if ((prev_h < 0 && ht > 0) || (prev_h > 0 && ht < 0)) {
                double lo = prev_s, hi = t;
                double f_lo = prev_h;
                while (hi - lo > kParamTol) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = h(mid);
                    if ((f_lo < 0) == (fm < 0)) {
                        lo = mid;
                        f_lo = fm;
                    } else {
                        hi = mid;
                    }
                }
                const double root = 0.5 * (lo + hi);
                if (root > iv.s0 + kParamTol && root < iv.s1 - kParamTol)
                    transitions.push_back({root, CrossingCause::CutFillTransition});
            }
            prev_s = t;
            prev_h = ht;
        }
    }
    if (!transitions.empty()) {
        out.crossings.insert(out.crossings.end(), transitions.begin(), transitions.end());
        sort_dedupe(out.crossings);
        build_intervals(out, terrain, plan);
    }
    return out;
}

VolumePair tangent_cut_fill(const TangentSubSegment& seg, const TerrainGrid& terrain,
                            const CostParameters& params) {
    const SegmentCrossings crossings = tangent_crossings(seg, terrain);
    // straight line: the Jacobian is constant over the whole sub-segment
    const double span = seg.s_hi() - seg.s_lo();
    const double jac = distance(seg.point_at(seg.s_hi()), seg.point_at(seg.s_lo())) / span;

    VolumePair vol;
    for (const auto& iv : crossings.intervals) {
        double om, th;
        tangent_h_coefficients(seg, terrain, iv.cell_u, iv.cell_v, om, th);
        const double h_mid = om + th * 0.5 * (iv.s0 + iv.s1);
        if (h_mid == 0.0) continue;
        if (h_mid > 0.0)
            vol.cut += jac * linear_section_volume(params.width, params.side_slope_sum, om, th,
                                                   iv.s0, iv.s1);
        else
            vol.fill += jac * linear_section_volume(params.width, params.side_slope_sum, -om, -th,
                                                    iv.s0, iv.s1);
    }
    return vol;
}

VolumePair arc_cut_fill(const ArcSegment& seg, const TerrainGrid& terrain,
                        const CostParameters& params) {
    const SegmentCrossings crossings = arc_crossings(seg, terrain);
    const double dz = seg.z1 - seg.z0;
    const double jac = std::sqrt(seg.radius * seg.radius * seg.sweep() * seg.sweep() + dz * dz);

    VolumePair vol;
    for (const auto& iv : crossings.intervals) {
        const ArcH h = arc_h_coefficients(seg, terrain, iv.cell_u, iv.cell_v);
        const double h_mid = h(0.5 * (iv.s0 + iv.s1));
        if (h_mid == 0.0) continue;
        const bool cut = h_mid > 0.0;
        const double v = jac * arc_section_volume(h, params.width, params.side_slope_sum, !cut,
                                                  iv.s0, iv.s1);
        (cut ? vol.cut : vol.fill) += v;
    }
    return vol;
}

double segment_length(const TangentSubSegment& seg) {
    return distance(seg.point_at(seg.s_hi()), seg.point_at(seg.s_lo()));
}

double arc_length(const ArcSegment& seg) {
    const double dz = seg.z1 - seg.z0;
    const double planar = seg.radius * std::abs(seg.sweep());
    return std::sqrt(planar * planar + dz * dz);
}

CostBreakdown evaluate_costs(const AlignmentDesign& design, const HorizontalGeometry& geom,
                             const TerrainGrid& terrain, const CostParameters& params) {
    params.validate();
    CostBreakdown total;
    double raw_cut = 0.0;

    for (const SegmentRef& ref : enumerate_segments(design, geom)) {
        SegmentCost sc;
        sc.ref = ref;
        if (ref.kind == SegmentRef::Kind::Tangent) {
            const TangentSubSegment seg = make_tangent_subsegment(design, geom, ref.k, ref.j);
            const VolumePair v = tangent_cut_fill(seg, terrain, params);
            sc.cut = v.cut;
            sc.fill = v.fill;
            sc.length = segment_length(seg);
        } else {
            const ArcSegment seg = make_arc_segment(design, geom, ref.k);
            const VolumePair v = arc_cut_fill(seg, terrain, params);
            sc.cut = v.cut;
            sc.fill = v.fill;
            sc.length = arc_length(seg);
        }
        raw_cut += sc.cut;
        total.fill_volume += sc.fill;
        total.length += sc.length;
        total.segments.push_back(sc);
    }

    total.cut_volume = params.shrink_factor * raw_cut;
    const double vc = total.cut_volume;
    const double vf = total.fill_volume;
    double unbalanced;
    if (params.borrow_cost)
        unbalanced = *params.borrow_cost * std::max(0.0, vf - vc) +
                     params.waste_cost * std::max(0.0, vc - vf);
    else
        unbalanced = params.waste_cost * std::abs(vf - vc);
    total.earthwork_cost = params.cut_cost * vc + params.fill_cost * vf + unbalanced;
    total.utility_cost = params.utility_cost * total.length;
    return total;
}

}  // namespace roadalign
