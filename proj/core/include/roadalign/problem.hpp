#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include "roadalign/alignment.hpp"
#include "roadalign/constraints.hpp"
#include "roadalign/costing.hpp"
#include "roadalign/pareto.hpp"
#include "roadalign/terrain.hpp"

namespace roadalign {

// Outcome of one objective evaluation. Designs whose geometry cannot be
// built (or that leave the terrain) come back with valid = false and
// sentinel objectives/penalty so solvers can still order them.
struct Evaluation {
    ObjectivePair objectives;
    double penalty = 0.0;
    bool feasible = false;
    bool valid = false;
    std::uint64_t index = 0;  // evaluation counter value, 1-based
};

inline constexpr double kInvalidSentinel = 1e30;

// Counts every objective call; shared by all solvers so budgets compare
// across methods. Budget checks happen at solver iteration boundaries.
class BiObjectiveProblem {
public:
    using Evaluator = std::function<Evaluation(const std::vector<double>&)>;

    BiObjectiveProblem(Evaluator evaluator, std::vector<double> lower, std::vector<double> upper,
                       std::uint64_t budget);

    Evaluation evaluate(const std::vector<double>& x);

    std::size_t dimension() const { return lower_.size(); }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    std::uint64_t budget() const { return budget_; }
    std::uint64_t evaluations() const { return count_.load(std::memory_order_relaxed); }
    bool budget_exhausted() const { return evaluations() >= budget_; }

    std::vector<double> clamp(std::vector<double> x) const;

private:
    Evaluator evaluator_;
    std::vector<double> lower_;
    std::vector<double> upper_;
    std::uint64_t budget_ = 0;
    std::atomic<std::uint64_t> count_{0};
};

// Everything fixed about one road design task: terrain, terminals, station
// layout, costing and constraints. Candidate designs differ only in the
// decision vector.
struct RoadProblem {
    const TerrainGrid* terrain = nullptr;
    Vec3 start;
    Vec3 end;
    std::vector<int> subdivisions;  // N+1 entries
    CostParameters costs;
    ConstraintConfig constraints;
    double penalty_weight = 1.0;
    double max_radius = 200.0;  // upper decision bound for radii

    std::size_t ip_count() const { return constraints.boxes.size(); }
    std::size_t dimension() const { return 3 * ip_count() + elevation_count(subdivisions); }

    AlignmentDesign make_design(const std::vector<double>& x) const;

    // Full evaluation: geometry, costs, constraints. Does not count.
    Evaluation evaluate_design(const AlignmentDesign& design) const;
    Evaluation evaluate_vector(const std::vector<double>& x) const;

    std::vector<double> lower_bounds() const;
    std::vector<double> upper_bounds() const;

    BiObjectiveProblem make_problem(std::uint64_t budget) const;
};

}  // namespace roadalign
