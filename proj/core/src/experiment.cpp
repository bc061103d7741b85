#include "roadalign/experiment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "roadalign/errors.hpp"
#include "roadalign/solvers.hpp"

namespace roadalign {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<IpBox> auto_boxes(const RunConfig& config, const TerrainGrid& terrain) {
    const Vec2 s = config.start.plan();
    const Vec2 e = config.end.plan();
    const auto n = static_cast<double>(config.ip_count);
    const double spacing = distance(s, e) / (n + 1.0);
    const double half = 0.45 * spacing;
    const double margin = 0.5 * terrain.cell_size();

    std::vector<IpBox> boxes;
    for (std::size_t k = 0; k < config.ip_count; ++k) {
        const double f = static_cast<double>(k + 1) / (n + 1.0);
        const Vec2 c = s + f * (e - s);
        IpBox box{std::max(c.x - half, terrain.origin_x() + margin),
                  std::min(c.x + half, terrain.max_x() - margin),
                  std::max(c.y - half, terrain.origin_y() + margin),
                  std::min(c.y + half, terrain.max_y() - margin)};
        if (box.x_lo > box.x_hi || box.y_lo > box.y_hi)
            throw ConfigError("auto IP box " + std::to_string(k) +
                              " collapsed: terminals too close to the terrain edge");
        boxes.push_back(box);
    }
    return boxes;
}

}  // namespace

Experiment::Experiment(const RunConfig& config)
    : config_(config), terrain_(load_terrain_file(config.terrain_path)) {
    if (!terrain_.contains(config_.start.x, config_.start.y))
        throw ConfigError("start point lies outside the terrain footprint");
    if (!terrain_.contains(config_.end.x, config_.end.y))
        throw ConfigError("end point lies outside the terrain footprint");
    if (config_.start_z_auto)
        config_.start.z = terrain_.ground_elevation(config_.start.x, config_.start.y);
    if (config_.end_z_auto)
        config_.end.z = terrain_.ground_elevation(config_.end.x, config_.end.y);

    if (config_.auto_boxes) config_.constraints.boxes = auto_boxes(config_, terrain_);
    for (std::size_t k = 0; k < config_.constraints.boxes.size(); ++k) {
        const IpBox& b = config_.constraints.boxes[k];
        if (!terrain_.contains(b.x_lo, b.y_lo) || !terrain_.contains(b.x_hi, b.y_hi))
            throw ConfigError("IP box " + std::to_string(k) +
                              " extends outside the terrain footprint");
    }
    config_.constraints.validate(config_.ip_count);

    road_.terrain = &terrain_;
    road_.start = config_.start;
    road_.end = config_.end;
    road_.subdivisions = config_.subdivisions;
    road_.costs = config_.costs;
    road_.constraints = config_.constraints;
    road_.penalty_weight = config_.solver.penalty_weight;
    road_.max_radius = std::max(config_.max_radius, config_.constraints.min_radius);
}

AlignmentDesign Experiment::make_seed() const {
    return seed_alignment(terrain_, config_.start, config_.end, config_.subdivisions,
                          config_.constraints, road_.max_radius);
}

RunArtifacts Experiment::run() const {
    const AlignmentDesign seed = make_seed();
    const std::vector<double> seed_vector = seed.to_vector();
    BiObjectiveProblem problem = road_.make_problem(config_.solver.budget);

    const auto t0 = std::chrono::steady_clock::now();
    ParetoFront front;
    const SolverConfig& sc = config_.solver;
    if (sc.type == "ws") {
        front = solve_weighted_sum(problem, seed_vector,
                                   {sc.n_weights, sc.initial_step, sc.step_tol});
    } else if (sc.type == "dms") {
        front = solve_dms(problem, {seed_vector}, {sc.initial_step, sc.step_tol});
    } else if (sc.type == "ea") {
        EvolutionaryConfig ea;
        ea.population = sc.population;
        ea.crossover_rate = sc.crossover_rate;
        ea.sbx_eta = sc.sbx_eta;
        ea.mutation_sigma = sc.mutation_sigma;
        ea.rng_seed = sc.seed;
        front = solve_evolutionary(problem, seed_vector, ea);
    } else {
        throw SolverError("unknown solver type: " + sc.type);
    }
    const auto t1 = std::chrono::steady_clock::now();

    RunArtifacts artifacts;
    artifacts.front = front;
    artifacts.evaluations = problem.evaluations();
    artifacts.wall_time_s = std::chrono::duration<double>(t1 - t0).count();

    const fs::path out_dir(config_.output_dir);
    fs::create_directories(out_dir / "designs");
    fs::create_directories(out_dir / "reports");

    const fs::path front_path = out_dir / "front.csv";
    {
        std::ofstream csv(front_path);
        if (!csv) throw SolverError("cannot write " + front_path.string());
        csv << "cost_e,cost_u,evaluation_index\n";
        for (const FrontPoint& p : front.points())
            csv << fmt(p.objectives.earthwork) << ',' << fmt(p.objectives.utility) << ','
                << p.evaluation_index << '\n';
    }
    artifacts.front_csv_path = front_path.string();

    std::ofstream breakdown(out_dir / "breakdown.csv");
    breakdown << "cut_volume,fill_volume,length,cost_e,cost_u\n";
    for (std::size_t i = 0; i < front.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "member_%03zu", i);
        const FrontPoint& p = front.points()[i];
        write_design_vector((out_dir / "designs" / (std::string(name) + ".design")).string(),
                            p.design);

        const AlignmentDesign design = road_.make_design(p.design);
        const HorizontalGeometry geom = build_horizontal(design);
        const CostBreakdown costs = evaluate_costs(design, geom, terrain_, road_.costs);
        const ConstraintReport report =
            evaluate_constraints(design, geom, terrain_, road_.constraints);
        breakdown << fmt(costs.cut_volume) << ',' << fmt(costs.fill_volume) << ','
                  << fmt(costs.length) << ',' << fmt(costs.earthwork_cost) << ','
                  << fmt(costs.utility_cost) << '\n';
        std::ofstream rep(out_dir / "reports" / (std::string(name) + ".txt"));
        write_geometry_report(rep, design, geom, costs, report);
    }
    breakdown.close();

    const fs::path manifest_path = out_dir / "manifest.json";
    {
        nlohmann::json manifest;
        manifest["solver"] = sc.type;
        manifest["seed"] = sc.seed;
        manifest["budget"] = sc.budget;
        manifest["evaluations"] = artifacts.evaluations;
        manifest["wall_time_s"] = artifacts.wall_time_s;
        manifest["front_size"] = front.size();
        manifest["terrain"] = config_.terrain_path;
        manifest["output"] = config_.output_dir;
        std::ofstream out(manifest_path);
        out << manifest.dump(2) << '\n';
    }
    artifacts.manifest_path = manifest_path.string();
    return artifacts;
}

void Experiment::evaluate_design_file(const std::string& design_path, std::ostream& out) const {
    const std::vector<double> values = read_design_vector(design_path);
    if (values.size() != road_.dimension())
        throw ConfigError("design file has " + std::to_string(values.size()) +
                          " values, expected " + std::to_string(road_.dimension()));
    const AlignmentDesign design = road_.make_design(values);
    const HorizontalGeometry geom = build_horizontal(design);
    const CostBreakdown costs = evaluate_costs(design, geom, terrain_, road_.costs);
    const ConstraintReport report = evaluate_constraints(design, geom, terrain_, road_.constraints);
    write_geometry_report(out, design, geom, costs, report);
}

std::vector<double> read_design_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open design file: " + path);
    std::vector<double> values;
    double v;
    while (in >> v) values.push_back(v);
    if (!in.eof()) throw ConfigError("design file contains non-numeric data: " + path);
    if (values.empty()) throw ConfigError("design file is empty: " + path);
    return values;
}

void write_design_vector(const std::string& path, const std::vector<double>& values) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write design file: " + path);
    for (double v : values) out << fmt(v) << '\n';
}

void write_geometry_report(std::ostream& out, const AlignmentDesign& design,
                           const HorizontalGeometry& geom, const CostBreakdown& costs,
                           const ConstraintReport& report) {
    out << "cost_e " << fmt(costs.earthwork_cost) << '\n';
    out << "cost_u " << fmt(costs.utility_cost) << '\n';
    out << "cut_volume " << fmt(costs.cut_volume) << '\n';
    out << "fill_volume " << fmt(costs.fill_volume) << '\n';
    out << "length " << fmt(costs.length) << '\n';
    out << "feasible " << (report.feasible ? "true" : "false") << '\n';
    out << "worst_violation " << fmt(report.worst) << '\n';

    out << "segments " << costs.segments.size() << '\n';
    for (const SegmentCost& sc : costs.segments) {
        const auto [lo, hi] = segment_domain(geom, sc.ref);
        const Vec3 a = centerline_point(design, geom, sc.ref, lo);
        const Vec3 b = centerline_point(design, geom, sc.ref, hi);
        if (sc.ref.kind == SegmentRef::Kind::Tangent)
            out << "  tangent k=" << sc.ref.k << " j=" << sc.ref.j;
        else
            out << "  arc k=" << sc.ref.k << " r=" << design.radius[sc.ref.k];
        out << " start=(" << a.x << ", " << a.y << ", " << a.z << ")"
            << " end=(" << b.x << ", " << b.y << ", " << b.z << ")"
            << " length=" << sc.length << " cut=" << sc.cut << " fill=" << sc.fill << '\n';
    }

    out << "violations_positive\n";
    bool any = false;
    for (const ConstraintViolation& v : report.violations) {
        if (v.value <= kFeasibilityTol) continue;
        out << "  " << to_string(v.family) << " index=" << v.index << " value=" << fmt(v.value)
            << '\n';
        any = true;
    }
    if (!any) out << "  none\n";
}

}  // namespace roadalign
