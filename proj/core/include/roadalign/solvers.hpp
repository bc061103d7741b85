#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "roadalign/pareto.hpp"
#include "roadalign/problem.hpp"

namespace roadalign {

// Weighted-sum: one penalized coordinate-search run per weight, anchors
// (v_e = 1, v_e = 0) first to estimate the Nadir/Utopia normalization.
struct WeightedSumConfig {
    int n_weights = 51;
    double initial_step = 0.1;  // relative to each variable's bound range
    double step_tol = 1e-9;
};

ParetoFront solve_weighted_sum(BiObjectiveProblem& problem, const std::vector<double>& seed,
                               const WeightedSumConfig& config);

// Direct multisearch: maintains a list of feasible non-dominated points and
// polls +-coordinate directions around a round-robin-selected member.
struct DmsConfig {
    double initial_step = 0.1;
    double step_tol = 1e-9;
};

ParetoFront solve_dms(BiObjectiveProblem& problem, const std::vector<std::vector<double>>& seeds,
                      const DmsConfig& config);

// Elitist evolutionary solver: non-dominated sorting with crowding distance,
// SBX crossover, bounded Gaussian mutation, constraint-domination.
struct EvolutionaryConfig {
    int population = 120;
    double crossover_rate = 0.9;
    double sbx_eta = 15.0;
    double mutation_sigma = 0.1;  // relative to each variable's bound range
    std::uint64_t rng_seed = 1;
    // Called after the initial population and after every generation with the
    // current feasible archive front.
    std::function<void(int generation, const ParetoFront&)> on_generation;
};

ParetoFront solve_evolutionary(BiObjectiveProblem& problem, const std::vector<double>& seed,
                               const EvolutionaryConfig& config);

// Single-objective compass search used by the weighted-sum runs. Polls
// +-coordinate directions, moves to the best improving neighbour, halves the
// step on failure. Budget is checked at poll-round boundaries. Tracks the
// best feasible point seen, which is what the weighted-sum method reports.
struct CoordinateSearchResult {
    std::vector<double> best_feasible_x;
    ObjectivePair best_feasible_objectives;
    std::uint64_t best_feasible_index = 0;
    bool has_feasible = false;
    std::uint64_t evals_used = 0;
};

CoordinateSearchResult coordinate_search(BiObjectiveProblem& problem,
                                         const std::vector<double>& x0,
                                         const std::function<double(const Evaluation&)>& objective,
                                         std::uint64_t run_budget, double initial_step,
                                         double step_tol);

}  // namespace roadalign
