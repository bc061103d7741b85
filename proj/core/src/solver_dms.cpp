#include <algorithm>
#include <cmath>

#include "roadalign/errors.hpp"
#include "roadalign/solvers.hpp"

namespace roadalign {

namespace {

struct ListEntry {
    std::vector<double> x;
    ObjectivePair objectives;
    std::uint64_t eval_index = 0;
    double step = 0.0;
};

bool entry_less(const ListEntry& a, const ListEntry& b) {
    if (a.objectives.earthwork != b.objectives.earthwork)
        return a.objectives.earthwork < b.objectives.earthwork;
    if (a.objectives.utility != b.objectives.utility)
        return a.objectives.utility < b.objectives.utility;
    return a.eval_index < b.eval_index;
}

// Insert if non-dominated and not a duplicate; evict members the newcomer
// dominates. Returns true when the list changed.
bool try_insert(std::vector<ListEntry>& list, ListEntry candidate) {
    for (const ListEntry& e : list) {
        if (e.objectives == candidate.objectives || dominates(e.objectives, candidate.objectives))
            return false;
    }
    std::erase_if(list, [&](const ListEntry& e) {
        return dominates(candidate.objectives, e.objectives);
    });
    list.insert(std::upper_bound(list.begin(), list.end(), candidate, entry_less),
                std::move(candidate));
    return true;
}

}  // namespace

ParetoFront solve_dms(BiObjectiveProblem& problem, const std::vector<std::vector<double>>& seeds,
                      const DmsConfig& config) {
    if (seeds.empty()) throw SeedingError("direct multisearch needs at least one seed point");
    const std::size_t dim = problem.dimension();
    std::vector<double> scale(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double span = problem.upper()[i] - problem.lower()[i];
        scale[i] = std::isfinite(span) && span > 0 ? span : 1.0;
    }

    std::vector<ListEntry> list;
    for (const std::vector<double>& s : seeds) {
        std::vector<double> x = problem.clamp(s);
        const Evaluation e = problem.evaluate(x);
        if (e.feasible) try_insert(list, {std::move(x), e.objectives, e.index, config.initial_step});
    }
    if (list.empty()) throw SeedingError("no feasible seed for direct multisearch");

    // round-robin over pollable members; budget checked at iteration end
    std::size_t turn = 0;
    while (!problem.budget_exhausted()) {
        std::vector<std::size_t> pollable;
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i].step > config.step_tol) pollable.push_back(i);
        if (pollable.empty()) break;

        const std::size_t center_idx = pollable[turn % pollable.size()];
        ++turn;
        const ListEntry center = list[center_idx];  // copy: polling may evict it

        bool success = false;
        for (std::size_t i = 0; i < dim; ++i) {
            for (double sign : {1.0, -1.0}) {
                std::vector<double> cand = center.x;
                cand[i] = std::clamp(cand[i] + sign * center.step * scale[i], problem.lower()[i],
                                     problem.upper()[i]);
                if (cand[i] == center.x[i]) continue;
                const Evaluation e = problem.evaluate(cand);
                if (!e.feasible) continue;
                if (try_insert(list, {std::move(cand), e.objectives, e.index, center.step}))
                    success = true;
            }
        }
        if (!success) {
            // the center may have moved (or been evicted) during insertion
            auto it = std::find_if(list.begin(), list.end(), [&](const ListEntry& e) {
                return e.eval_index == center.eval_index;
            });
            if (it != list.end()) it->step *= 0.5;
        }
    }

    std::vector<FrontPoint> points;
    points.reserve(list.size());
    for (ListEntry& e : list)
        points.push_back({e.objectives, std::move(e.x), e.eval_index});
    return pareto_filter(std::move(points));
}

}  // namespace roadalign
