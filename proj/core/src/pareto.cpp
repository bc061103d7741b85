#include "roadalign/pareto.hpp"

#include <algorithm>
#include <cmath>

namespace roadalign {

bool dominates(ObjectivePair a, ObjectivePair b) {
    if (a.earthwork > b.earthwork || a.utility > b.utility) return false;
    return a.earthwork < b.earthwork || a.utility < b.utility;
}

ParetoFront pareto_filter(std::vector<FrontPoint> candidates) {
    std::sort(candidates.begin(), candidates.end(), [](const FrontPoint& a, const FrontPoint& b) {
        if (a.objectives.earthwork != b.objectives.earthwork)
            return a.objectives.earthwork < b.objectives.earthwork;
        if (a.objectives.utility != b.objectives.utility)
            return a.objectives.utility < b.objectives.utility;
        return a.evaluation_index < b.evaluation_index;
    });

    ParetoFront front;
    double best_utility = std::numeric_limits<double>::infinity();
    for (FrontPoint& p : candidates) {
        // after the sort, a point survives iff it strictly improves utility
        if (p.objectives.utility < best_utility) {
            best_utility = p.objectives.utility;
            front.points_.push_back(std::move(p));
        }
    }
    return front;
}

NadirUtopia NadirUtopia::from_points(const std::vector<ObjectivePair>& points) {
    NadirUtopia out;
    out.nadir = {-std::numeric_limits<double>::infinity(),
                 -std::numeric_limits<double>::infinity()};
    out.utopia = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    for (const ObjectivePair& p : points) {
        out.nadir.earthwork = std::max(out.nadir.earthwork, p.earthwork);
        out.nadir.utility = std::max(out.nadir.utility, p.utility);
        out.utopia.earthwork = std::min(out.utopia.earthwork, p.earthwork);
        out.utopia.utility = std::min(out.utopia.utility, p.utility);
    }
    return out;
}

namespace {
double safe_norm(double span) { return span > 1e-30 ? 1.0 / span : 1.0; }
}  // namespace

double NadirUtopia::norm_earthwork() const { return safe_norm(nadir.earthwork - utopia.earthwork); }
double NadirUtopia::norm_utility() const { return safe_norm(nadir.utility - utopia.utility); }

double weighted_sum_scalarize(ObjectivePair pair, double v_e, const NadirUtopia& ref) {
    const double w_e = v_e * ref.norm_earthwork();
    const double w_u = (1.0 - v_e) * ref.norm_utility();
    return w_e * pair.earthwork + w_u * pair.utility;
}

}  // namespace roadalign
