#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "roadalign/config.hpp"
#include "roadalign/pareto.hpp"
#include "roadalign/problem.hpp"
#include "roadalign/seed.hpp"

namespace roadalign {

struct RunArtifacts {
    ParetoFront front;
    std::uint64_t evaluations = 0;
    double wall_time_s = 0.0;
    std::string front_csv_path;
    std::string manifest_path;
};

// Binds a RunConfig to a loaded terrain: resolves auto terminals and boxes,
// assembles the road problem, generates the seed, runs the solver and writes
// the output artifacts (front.csv, per-member design records and geometry
// reports, manifest.json).
class Experiment {
public:
    explicit Experiment(const RunConfig& config);
    Experiment(const Experiment&) = delete;
    Experiment& operator=(const Experiment&) = delete;

    const TerrainGrid& terrain() const { return terrain_; }
    const RoadProblem& road() const { return road_; }
    const RunConfig& config() const { return config_; }

    AlignmentDesign make_seed() const;

    RunArtifacts run() const;

    // Costs plus constraint diagnostics for one serialized design.
    void evaluate_design_file(const std::string& design_path, std::ostream& out) const;

private:
    RunConfig config_;
    TerrainGrid terrain_;
    RoadProblem road_;
};

// Flat numeric design record: X, Y, R, Z values in declared order,
// whitespace-separated text, full double precision.
std::vector<double> read_design_vector(const std::string& path);
void write_design_vector(const std::string& path, const std::vector<double>& values);

// Per-member human-readable report: segments, costs, constraint diagnostic.
void write_geometry_report(std::ostream& out, const AlignmentDesign& design,
                           const HorizontalGeometry& geom, const CostBreakdown& costs,
                           const ConstraintReport& report);

}  // namespace roadalign
