#include "roadalign/problem.hpp"

#include <algorithm>

#include "roadalign/errors.hpp"

namespace roadalign {

BiObjectiveProblem::BiObjectiveProblem(Evaluator evaluator, std::vector<double> lower,
                                       std::vector<double> upper, std::uint64_t budget)
    : evaluator_(std::move(evaluator)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      budget_(budget) {
    if (lower_.size() != upper_.size()) throw ConfigError("bound vectors differ in length");
    for (std::size_t i = 0; i < lower_.size(); ++i)
        if (lower_[i] > upper_[i]) throw ConfigError("lower bound exceeds upper bound");
}

Evaluation BiObjectiveProblem::evaluate(const std::vector<double>& x) {
    Evaluation e = evaluator_(x);
    e.index = count_.fetch_add(1, std::memory_order_relaxed) + 1;
    return e;
}

std::vector<double> BiObjectiveProblem::clamp(std::vector<double> x) const {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lower_[i], upper_[i]);
    return x;
}

AlignmentDesign RoadProblem::make_design(const std::vector<double>& x) const {
    AlignmentDesign design;
    design.start = start;
    design.end = end;
    design.subdivisions = subdivisions;
    const std::size_t n = ip_count();
    design.ip_x.resize(n);
    design.ip_y.resize(n);
    design.radius.resize(n);
    design.elevations.resize(elevation_count(subdivisions));
    design.from_vector(x);
    return design;
}

Evaluation RoadProblem::evaluate_design(const AlignmentDesign& design) const {
    Evaluation out;
    try {
        const HorizontalGeometry geom = build_horizontal(design);
        const CostBreakdown costs_out = evaluate_costs(design, geom, *terrain, costs);
        const ConstraintReport report = evaluate_constraints(design, geom, *terrain, constraints);
        out.objectives = {costs_out.earthwork_cost, costs_out.utility_cost};
        out.penalty = penalty(report, penalty_weight);
        out.feasible = report.feasible;
        out.valid = true;
    } catch (const GeometryError&) {
        out.objectives = {kInvalidSentinel, kInvalidSentinel};
        out.penalty = kInvalidSentinel;
    } catch (const OutOfBoundsError&) {
        out.objectives = {kInvalidSentinel, kInvalidSentinel};
        out.penalty = kInvalidSentinel;
    }
    return out;
}

Evaluation RoadProblem::evaluate_vector(const std::vector<double>& x) const {
    return evaluate_design(make_design(x));
}

std::vector<double> RoadProblem::lower_bounds() const {
    std::vector<double> lo;
    lo.reserve(dimension());
    for (const IpBox& b : constraints.boxes) lo.push_back(b.x_lo);
    for (const IpBox& b : constraints.boxes) lo.push_back(b.y_lo);
    for (std::size_t k = 0; k < ip_count(); ++k) lo.push_back(constraints.min_radius);
    const double z_lo = terrain->min_elevation() - constraints.elevation_corridor;
    for (std::size_t i = 0; i < elevation_count(subdivisions); ++i) lo.push_back(z_lo);
    return lo;
}

std::vector<double> RoadProblem::upper_bounds() const {
    std::vector<double> hi;
    hi.reserve(dimension());
    for (const IpBox& b : constraints.boxes) hi.push_back(b.x_hi);
    for (const IpBox& b : constraints.boxes) hi.push_back(b.y_hi);
    for (std::size_t k = 0; k < ip_count(); ++k) hi.push_back(max_radius);
    const double z_hi = terrain->max_elevation() + constraints.elevation_corridor;
    for (std::size_t i = 0; i < elevation_count(subdivisions); ++i) hi.push_back(z_hi);
    return hi;
}

BiObjectiveProblem RoadProblem::make_problem(std::uint64_t budget) const {
    if (!terrain) throw ConfigError("road problem has no terrain");
    costs.validate();
    constraints.validate(ip_count());
    return BiObjectiveProblem([*this](const std::vector<double>& x) { return evaluate_vector(x); },
                              lower_bounds(), upper_bounds(), budget);
}

}  // namespace roadalign
