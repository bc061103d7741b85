#include <algorithm>
#include <cmath>
#include <random>

#include "roadalign/errors.hpp"
#include "roadalign/solvers.hpp"

namespace roadalign {

namespace {

struct Individual {
    std::vector<double> x;
    ObjectivePair objectives;
    double penalty = 0.0;
    bool feasible = false;
    std::uint64_t eval_index = 0;
    int rank = 0;
    double crowding = 0.0;
};

// Constraint-domination: feasible beats infeasible; two infeasible compare by
// penalty; two feasible compare by Pareto dominance.
bool constraint_dominates(const Individual& a, const Individual& b) {
    if (a.feasible != b.feasible) return a.feasible;
    if (!a.feasible) return a.penalty < b.penalty;
    return dominates(a.objectives, b.objectives);
}

void assign_rank_and_crowding(std::vector<Individual>& pop) {
    const std::size_t n = pop.size();
    std::vector<int> domination_count(n, 0);
    std::vector<std::vector<std::size_t>> dominated_by(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (constraint_dominates(pop[i], pop[j])) dominated_by[i].push_back(j);
            else if (constraint_dominates(pop[j], pop[i])) ++domination_count[i];
        }
    }
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (domination_count[i] == 0) current.push_back(i);
    while (!current.empty()) {
        for (std::size_t i : current) pop[i].rank = static_cast<int>(fronts.size());
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t j : dominated_by[i])
                if (--domination_count[j] == 0) next.push_back(j);
        }
        fronts.push_back(std::move(current));
        current = std::move(next);
    }

    for (const std::vector<std::size_t>& front : fronts) {
        for (std::size_t i : front) pop[i].crowding = 0.0;
        if (front.size() <= 2) {
            for (std::size_t i : front) pop[i].crowding = std::numeric_limits<double>::infinity();
            continue;
        }
        for (int obj = 0; obj < 2; ++obj) {
            std::vector<std::size_t> order(front);
            auto value = [&pop, obj](std::size_t i) {
                return obj == 0 ? pop[i].objectives.earthwork : pop[i].objectives.utility;
            };
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return value(a) < value(b); });
            pop[order.front()].crowding = std::numeric_limits<double>::infinity();
            pop[order.back()].crowding = std::numeric_limits<double>::infinity();
            const double span = value(order.back()) - value(order.front());
            if (span <= 0) continue;
            for (std::size_t k = 1; k + 1 < order.size(); ++k)
                pop[order[k]].crowding += (value(order[k + 1]) - value(order[k - 1])) / span;
        }
    }
}

bool selection_less(const Individual& a, const Individual& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.crowding != b.crowding) return a.crowding > b.crowding;
    return a.eval_index < b.eval_index;
}

}  // namespace

ParetoFront solve_evolutionary(BiObjectiveProblem& problem, const std::vector<double>& seed,
                               const EvolutionaryConfig& config) {
    if (config.population < 4) throw ConfigError("evolutionary population must be at least 4");
    const std::size_t dim = problem.dimension();
    const std::size_t pop_size = static_cast<std::size_t>(config.population);

    std::mt19937_64 rng(config.rng_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<double> scale(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double span = problem.upper()[i] - problem.lower()[i];
        scale[i] = std::isfinite(span) && span > 0 ? span : 1.0;
    }

    auto evaluate_into = [&problem](std::vector<double> x) {
        Individual ind;
        const Evaluation e = problem.evaluate(x);
        ind.x = std::move(x);
        ind.objectives = e.objectives;
        ind.penalty = e.penalty;
        ind.feasible = e.feasible;
        ind.eval_index = e.index;
        return ind;
    };

    std::vector<Individual> pop;
    pop.reserve(pop_size);
    pop.push_back(evaluate_into(problem.clamp(seed)));
    while (pop.size() < pop_size) {
        std::vector<double> x(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const double lo = problem.lower()[i];
            const double hi = problem.upper()[i];
            x[i] = std::isfinite(hi - lo) ? lo + unit(rng) * (hi - lo) : unit(rng);
        }
        pop.push_back(evaluate_into(std::move(x)));
    }

    std::vector<FrontPoint> archive;
    auto archive_feasible = [&archive](const Individual& ind) {
        if (ind.feasible) archive.push_back({ind.objectives, ind.x, ind.eval_index});
    };
    for (const Individual& ind : pop) archive_feasible(ind);
    ParetoFront front = pareto_filter(std::move(archive));

    int generation = 0;
    if (config.on_generation) config.on_generation(generation, front);

    while (!problem.budget_exhausted()) {
        assign_rank_and_crowding(pop);

        auto tournament = [&]() -> const Individual& {
            const std::size_t a = static_cast<std::size_t>(unit(rng) * pop.size()) % pop.size();
            const std::size_t b = static_cast<std::size_t>(unit(rng) * pop.size()) % pop.size();
            return selection_less(pop[a], pop[b]) ? pop[a] : pop[b];
        };

        std::vector<Individual> offspring;
        offspring.reserve(pop_size);
        while (offspring.size() < pop_size) {
            const Individual& p1 = tournament();
            const Individual& p2 = tournament();
            std::vector<double> c1 = p1.x;
            std::vector<double> c2 = p2.x;
            if (unit(rng) < config.crossover_rate) {
                // SBX, per-gene spread factor
                for (std::size_t i = 0; i < dim; ++i) {
                    if (unit(rng) > 0.5) continue;
                    const double u = unit(rng);
                    const double beta =
                        u <= 0.5 ? std::pow(2.0 * u, 1.0 / (config.sbx_eta + 1.0))
                                 : std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (config.sbx_eta + 1.0));
                    const double v1 = 0.5 * ((1.0 + beta) * p1.x[i] + (1.0 - beta) * p2.x[i]);
                    const double v2 = 0.5 * ((1.0 - beta) * p1.x[i] + (1.0 + beta) * p2.x[i]);
                    c1[i] = v1;
                    c2[i] = v2;
                }
            }
            std::normal_distribution<double> gauss(0.0, 1.0);
            const double mutation_rate = 1.0 / static_cast<double>(dim);
            for (std::vector<double>* child : {&c1, &c2}) {
                for (std::size_t i = 0; i < dim; ++i) {
                    if (unit(rng) < mutation_rate)
                        (*child)[i] += gauss(rng) * config.mutation_sigma * scale[i];
                }
                *child = problem.clamp(std::move(*child));
            }
            offspring.push_back(evaluate_into(std::move(c1)));
            if (offspring.size() < pop_size) offspring.push_back(evaluate_into(std::move(c2)));
        }

        std::vector<FrontPoint> merged_archive(front.points().begin(), front.points().end());
        archive = std::move(merged_archive);
        for (const Individual& ind : offspring) archive_feasible(ind);
        front = pareto_filter(std::move(archive));

        pop.insert(pop.end(), std::make_move_iterator(offspring.begin()),
                   std::make_move_iterator(offspring.end()));
        assign_rank_and_crowding(pop);
        std::sort(pop.begin(), pop.end(), selection_less);
        pop.resize(pop_size);

        ++generation;
        if (config.on_generation) config.on_generation(generation, front);
    }
    return front;
}

}  // namespace roadalign
