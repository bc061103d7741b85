#include "roadalign/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "roadalign/errors.hpp"

namespace roadalign {

namespace {

using nlohmann::json;

Vec3 parse_point(const json& j, const std::string& field, bool& z_auto) {
    if (!j.is_array() || (j.size() != 2 && j.size() != 3))
        throw ConfigError(field + " must be [x, y] or [x, y, z]");
    Vec3 p;
    p.x = j.at(0).get<double>();
    p.y = j.at(1).get<double>();
    z_auto = j.size() == 2;
    if (!z_auto) p.z = j.at(2).get<double>();
    return p;
}

template <typename T>
T get_or(const json& j, const std::string& key, T fallback) {
    if (!j.contains(key)) return fallback;
    return j.at(key).get<T>();
}

void parse_costs(const json& j, CostParameters& costs) {
    costs.cut_cost = get_or(j, "cut", costs.cut_cost);
    costs.fill_cost = get_or(j, "fill", costs.fill_cost);
    costs.waste_cost = get_or(j, "waste", costs.waste_cost);
    costs.utility_cost = get_or(j, "utility", costs.utility_cost);
    costs.width = get_or(j, "width", costs.width);
    costs.side_slope_sum = get_or(j, "side_slope_sum", costs.side_slope_sum);
    costs.shrink_factor = get_or(j, "shrink", costs.shrink_factor);
    if (j.contains("borrow") && !j.at("borrow").is_null())
        costs.borrow_cost = j.at("borrow").get<double>();
}

void parse_constraints(const json& j, RunConfig& config) {
    ConstraintConfig& c = config.constraints;
    c.min_radius = get_or(j, "min_radius", c.min_radius);
    c.max_grade = get_or(j, "max_grade", c.max_grade);
    c.elevation_corridor = get_or(j, "corridor", c.elevation_corridor);
    config.max_radius = get_or(j, "max_radius", std::max(config.max_radius, 10.0 * c.min_radius));
    if (!j.contains("boxes") || (j.at("boxes").is_string() && j.at("boxes") == "auto")) {
        config.auto_boxes = true;
        return;
    }
    const json& boxes = j.at("boxes");
    if (!boxes.is_array()) throw ConfigError("constraints.boxes must be \"auto\" or an array");
    config.auto_boxes = false;
    for (const json& b : boxes) {
        if (!b.is_array() || b.size() != 4)
            throw ConfigError("each IP box must be [x_lo, x_hi, y_lo, y_hi]");
        c.boxes.push_back({b.at(0).get<double>(), b.at(1).get<double>(), b.at(2).get<double>(),
                           b.at(3).get<double>()});
    }
}

void parse_solver(const json& j, SolverConfig& s) {
    s.type = get_or<std::string>(j, "type", s.type);
    if (s.type != "ws" && s.type != "dms" && s.type != "ea")
        throw ConfigError("solver.type must be one of ws|dms|ea, got '" + s.type + "'");
    s.budget = get_or(j, "budget", s.budget);
    s.n_weights = get_or(j, "weights", s.n_weights);
    s.population = get_or(j, "population", s.population);
    s.crossover_rate = get_or(j, "crossover_rate", s.crossover_rate);
    s.sbx_eta = get_or(j, "sbx_eta", s.sbx_eta);
    s.mutation_sigma = get_or(j, "mutation_sigma", s.mutation_sigma);
    s.initial_step = get_or(j, "initial_step", s.initial_step);
    s.step_tol = get_or(j, "step_tol", s.step_tol);
    s.seed = get_or(j, "seed", s.seed);
    s.penalty_weight = get_or(j, "penalty_weight", s.penalty_weight);
}

}  // namespace

RunConfig parse_run_config(const std::string& text, const std::string& base_dir) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& err) {
        throw ConfigError(std::string("config is not valid JSON: ") + err.what());
    }

    RunConfig config;
    try {
        if (!root.contains("terrain")) throw ConfigError("config is missing 'terrain'");
        config.terrain_path = root.at("terrain").get<std::string>();
        if (!base_dir.empty() && std::filesystem::path(config.terrain_path).is_relative())
            config.terrain_path = (std::filesystem::path(base_dir) / config.terrain_path).string();

        if (!root.contains("start") || !root.contains("end"))
            throw ConfigError("config needs 'start' and 'end' points");
        config.start = parse_point(root.at("start"), "start", config.start_z_auto);
        config.end = parse_point(root.at("end"), "end", config.end_z_auto);

        config.ip_count = get_or<std::size_t>(root, "ips", config.ip_count);
        if (config.ip_count < 1) throw ConfigError("'ips' must be at least 1");

        if (root.contains("subdivisions") && root.at("subdivisions").is_array()) {
            config.subdivisions = root.at("subdivisions").get<std::vector<int>>();
            if (config.subdivisions.size() != config.ip_count + 1)
                throw ConfigError("'subdivisions' array must have ips+1 entries");
        } else {
            const int m = get_or(root, "subdivisions", 5);
            config.subdivisions.assign(config.ip_count + 1, m);
        }
        for (int m : config.subdivisions)
            if (m < 1) throw ConfigError("'subdivisions' entries must be >= 1");

        if (root.contains("costs")) parse_costs(root.at("costs"), config.costs);
        config.costs.validate();
        if (root.contains("constraints")) parse_constraints(root.at("constraints"), config);
        if (!config.auto_boxes && config.constraints.boxes.size() != config.ip_count)
            throw ConfigError("constraints.boxes must list one box per IP");
        if (root.contains("solver")) parse_solver(root.at("solver"), config.solver);
        config.output_dir = get_or<std::string>(root, "output", config.output_dir);
    } catch (const json::exception& err) {
        throw ConfigError(std::string("bad config value: ") + err.what());
    }
    return config;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_run_config(buffer.str(), std::filesystem::path(path).parent_path().string());
}

}  // namespace roadalign
