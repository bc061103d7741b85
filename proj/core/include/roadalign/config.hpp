#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roadalign/constraints.hpp"
#include "roadalign/costing.hpp"
#include "roadalign/geometry.hpp"

namespace roadalign {

struct SolverConfig {
    std::string type = "dms";  // ws | dms | ea
    std::uint64_t budget = 51000;
    int n_weights = 51;
    int population = 120;
    double crossover_rate = 0.9;
    double sbx_eta = 15.0;
    double mutation_sigma = 0.1;
    double initial_step = 0.1;
    double step_tol = 1e-9;
    std::uint64_t seed = 1;
    double penalty_weight = 1.0;
};

// One experiment: terrain, terminals, discretization, costing, constraints
// and the solver block. Loaded from a JSON config file.
struct RunConfig {
    std::string terrain_path;
    Vec3 start;
    Vec3 end;
    bool start_z_auto = false;  // z omitted: use ground elevation
    bool end_z_auto = false;
    std::size_t ip_count = 6;
    std::vector<int> subdivisions;  // expanded to N+1 entries
    CostParameters costs;
    ConstraintConfig constraints;  // boxes empty when auto_boxes
    bool auto_boxes = true;
    double max_radius = 200.0;
    SolverConfig solver;
    std::string output_dir = "out";
};

// Parse a config file. Unknown solver types and malformed values throw
// ConfigError naming the offending field. Relative terrain paths resolve
// against the config file's directory.
RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& text, const std::string& base_dir);

}  // namespace roadalign
