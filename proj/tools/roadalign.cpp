#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "roadalign/errors.hpp"
#include "roadalign/experiment.hpp"
#include "roadalign/synthetic.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitTerrain = 3;
constexpr int kExitSeeding = 4;
constexpr int kExitSolver = 5;

struct RunFlags {
    std::string config_path;
    std::string out_dir;
    std::string solver;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    bool seed_set = false;
    bool budget_set = false;
};

roadalign::RunConfig load_with_overrides(const RunFlags& flags) {
    roadalign::RunConfig config = roadalign::load_run_config(flags.config_path);
    if (!flags.out_dir.empty()) config.output_dir = flags.out_dir;
    if (!flags.solver.empty()) {
        if (flags.solver != "ws" && flags.solver != "dms" && flags.solver != "ea")
            throw roadalign::ConfigError("--solver must be one of ws|dms|ea");
        config.solver.type = flags.solver;
    }
    if (flags.seed_set) config.solver.seed = flags.seed;
    if (flags.budget_set) config.solver.budget = flags.budget;
    return config;
}

int run_command(const RunFlags& flags) {
    const roadalign::RunConfig config = load_with_overrides(flags);
    roadalign::Experiment experiment(config);
    const roadalign::RunArtifacts artifacts = experiment.run();
    std::cout << "solver " << config.solver.type << "\n"
              << "evaluations " << artifacts.evaluations << "\n"
              << "front_size " << artifacts.front.size() << "\n"
              << "front_csv " << artifacts.front_csv_path << "\n"
              << "manifest " << artifacts.manifest_path << "\n";
    return 0;
}

int eval_command(const RunFlags& flags, const std::string& design_path) {
    const roadalign::RunConfig config = load_with_overrides(flags);
    roadalign::Experiment experiment(config);
    experiment.evaluate_design_file(design_path, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bi-objective 3D road alignment design: earthwork vs road length"};
    app.require_subcommand(1);

    RunFlags flags;
    std::string design_path;

    CLI::App* run = app.add_subcommand("run", "Run a solver and write the Pareto front");
    run->add_option("--config", flags.config_path, "Run config file (JSON)")->required();
    run->add_option("--out", flags.out_dir, "Output directory (overrides config)");
    run->add_option("--solver", flags.solver, "Solver: ws|dms|ea (overrides config)");
    run->add_option("--seed", flags.seed, "Random seed (overrides config)")
        ->each([&flags](const std::string&) { flags.seed_set = true; });
    run->add_option("--budget", flags.budget, "Evaluation budget (overrides config)")
        ->each([&flags](const std::string&) { flags.budget_set = true; });

    CLI::App* eval = app.add_subcommand("eval", "Evaluate one design file against a config");
    eval->add_option("--config", flags.config_path, "Run config file (JSON)")->required();
    eval->add_option("design", design_path, "Design record (flat X Y R Z values)")->required();

    CLI::App* gen = app.add_subcommand("gen-terrain", "Write a synthetic terrain file");
    roadalign::SyntheticTerrainSpec spec;
    std::string kind_name = "hills";
    std::string terrain_out = "terrain.grid";
    gen->add_option("--type", kind_name, "plane|ridge|valley|hills");
    gen->add_option("--width", spec.width, "Extent along x, meters");
    gen->add_option("--height", spec.height, "Extent along y, meters");
    gen->add_option("--cell", spec.cell_size, "Cell size, meters");
    gen->add_option("--base", spec.base_elevation, "Base elevation, meters");
    gen->add_option("--amplitude", spec.amplitude, "Relief amplitude, meters");
    gen->add_option("--wavelength", spec.wavelength, "Relief wavelength, meters");
    gen->add_option("--slope-x", spec.slope_x, "Plane gradient along x");
    gen->add_option("--slope-y", spec.slope_y, "Plane gradient along y");
    gen->add_option("--seed", spec.seed, "Seed for the hills phases");
    gen->add_option("--out", terrain_out, "Output terrain file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (run->parsed()) return run_command(flags);
        if (eval->parsed()) return eval_command(flags, design_path);
        if (gen->parsed()) {
            spec.kind = roadalign::terrain_kind_from_string(kind_name);
            roadalign::write_raster_file(terrain_out, roadalign::generate_raster(spec));
            std::cout << "terrain " << terrain_out << "\n";
            return 0;
        }
    } catch (const roadalign::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const roadalign::GeometryError& e) {
        std::cerr << "design error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const roadalign::TerrainError& e) {
        std::cerr << "terrain error: " << e.what() << "\n";
        return kExitTerrain;
    } catch (const roadalign::SeedingError& e) {
        std::cerr << "seeding error: " << e.what() << "\n";
        return kExitSeeding;
    } catch (const roadalign::SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    }
    return 0;
}
