#pragma once

#include <cstdint>
#include <vector>

namespace roadalign {

// Both objectives are minimized.
struct ObjectivePair {
    double earthwork = 0.0;
    double utility = 0.0;

    bool operator==(const ObjectivePair&) const = default;
};

// a dominates b: a <= b component-wise with at least one strict inequality.
bool dominates(ObjectivePair a, ObjectivePair b);

struct FrontPoint {
    ObjectivePair objectives;
    std::vector<double> design;       // decision vector
    std::uint64_t evaluation_index = 0;
};

// Mutually non-dominated points, sorted by earthwork cost ascending (utility
// therefore strictly descending).
class ParetoFront {
public:
    ParetoFront() = default;
    const std::vector<FrontPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

private:
    friend ParetoFront pareto_filter(std::vector<FrontPoint> candidates);
    std::vector<FrontPoint> points_;
};

// Exact non-dominated subset. Duplicate objective pairs collapse to the
// earliest evaluation index. Idempotent and order-independent.
ParetoFront pareto_filter(std::vector<FrontPoint> candidates);

// Component-wise worst/best objective values over a reference front.
struct NadirUtopia {
    ObjectivePair nadir;
    ObjectivePair utopia;

    static NadirUtopia from_points(const std::vector<ObjectivePair>& points);

    // 1/(nadir - utopia) per component; degenerate spans fall back to 1.
    double norm_earthwork() const;
    double norm_utility() const;
};

// w_e * earthwork + w_u * utility with w = v * N, v_u = 1 - v_e.
double weighted_sum_scalarize(ObjectivePair pair, double v_e, const NadirUtopia& ref);

}  // namespace roadalign
