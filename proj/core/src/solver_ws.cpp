#include <algorithm>
#include <cmath>

#include "roadalign/errors.hpp"
#include "roadalign/solvers.hpp"

namespace roadalign {

CoordinateSearchResult coordinate_search(BiObjectiveProblem& problem,
                                         const std::vector<double>& x0,
                                         const std::function<double(const Evaluation&)>& objective,
                                         std::uint64_t run_budget, double initial_step,
                                         double step_tol) {
    const std::size_t dim = problem.dimension();
    std::vector<double> scale(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double span = problem.upper()[i] - problem.lower()[i];
        scale[i] = std::isfinite(span) && span > 0 ? span : 1.0;
    }

    CoordinateSearchResult result;
    double f_best_feasible = std::numeric_limits<double>::infinity();
    auto track_feasible = [&](const Evaluation& e, const std::vector<double>& at, double f) {
        if (!e.feasible || f >= f_best_feasible) return;
        f_best_feasible = f;
        result.best_feasible_x = at;
        result.best_feasible_objectives = e.objectives;
        result.best_feasible_index = e.index;
        result.has_feasible = true;
    };

    std::vector<double> x = problem.clamp(x0);
    const Evaluation first = problem.evaluate(x);
    result.evals_used = 1;
    double f_incumbent = objective(first);
    track_feasible(first, x, f_incumbent);

    double step = initial_step;
    while (result.evals_used < run_budget && step > step_tol) {
        double f_best = f_incumbent;
        std::vector<double> x_best;
        for (std::size_t i = 0; i < dim; ++i) {
            for (double sign : {1.0, -1.0}) {
                std::vector<double> cand = x;
                cand[i] = std::clamp(cand[i] + sign * step * scale[i], problem.lower()[i],
                                     problem.upper()[i]);
                if (cand[i] == x[i]) continue;  // pinned at a bound
                const Evaluation e = problem.evaluate(cand);
                ++result.evals_used;
                const double f = objective(e);
                track_feasible(e, cand, f);
                if (f < f_best) {
                    f_best = f;
                    x_best = std::move(cand);
                }
            }
        }
        if (x_best.empty()) {
            step *= 0.5;
        } else {
            x = std::move(x_best);
            f_incumbent = f_best;
        }
    }
    return result;
}

ParetoFront solve_weighted_sum(BiObjectiveProblem& problem, const std::vector<double>& seed,
                               const WeightedSumConfig& config) {
    if (config.n_weights < 1) throw ConfigError("weighted sum needs at least one weight");
    const std::uint64_t per_run = problem.budget() / static_cast<std::uint64_t>(config.n_weights);

    auto run = [&](const std::function<double(const Evaluation&)>& objective) {
        return coordinate_search(problem, seed, objective, per_run, config.initial_step,
                                 config.step_tol);
    };

    // anchors minimize each raw objective alone; their best feasible points
    // bound the front and give the normalization factors
    auto penalized = [](double raw, const Evaluation& e) { return raw + e.penalty; };
    CoordinateSearchResult anchor_e =
        run([&](const Evaluation& e) { return penalized(e.objectives.earthwork, e); });
    if (config.n_weights == 1) {
        if (!anchor_e.has_feasible)
            throw SeedingError("weighted-sum anchor run found no feasible point");
        return pareto_filter({{anchor_e.best_feasible_objectives, anchor_e.best_feasible_x,
                               anchor_e.best_feasible_index}});
    }
    CoordinateSearchResult anchor_u =
        run([&](const Evaluation& e) { return penalized(e.objectives.utility, e); });
    if (!anchor_e.has_feasible || !anchor_u.has_feasible)
        throw SeedingError("weighted-sum anchor runs found no feasible point");

    NadirUtopia ref = NadirUtopia::from_points(
        {anchor_e.best_feasible_objectives, anchor_u.best_feasible_objectives});

    std::vector<FrontPoint> candidates;
    candidates.push_back({anchor_e.best_feasible_objectives, anchor_e.best_feasible_x,
                          anchor_e.best_feasible_index});
    candidates.push_back({anchor_u.best_feasible_objectives, anchor_u.best_feasible_x,
                          anchor_u.best_feasible_index});

    for (int i = 0; i < config.n_weights; ++i) {
        const double v_e = static_cast<double>(i) / (config.n_weights - 1);
        if (i == 0 || i + 1 == config.n_weights) continue;  // anchors already ran
        CoordinateSearchResult r = run([&](const Evaluation& e) {
            return penalized(weighted_sum_scalarize(e.objectives, v_e, ref), e);
        });
        if (r.has_feasible)
            candidates.push_back(
                {r.best_feasible_objectives, r.best_feasible_x, r.best_feasible_index});
    }
    return pareto_filter(std::move(candidates));
}

}  // namespace roadalign
