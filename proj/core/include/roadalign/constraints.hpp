#pragma once

#include <string>
#include <vector>

#include "roadalign/alignment.hpp"
#include "roadalign/terrain.hpp"

namespace roadalign {

struct IpBox {
    double x_lo = 0.0, x_hi = 0.0;
    double y_lo = 0.0, y_hi = 0.0;
};

struct ConstraintConfig {
    std::vector<IpBox> boxes;  // one per IP
    double min_radius = 20.0;
    double max_grade = 0.15;
    double elevation_corridor = 10.0;  // allowed |road - ground|, meters

    void validate(std::size_t ip_count) const;
};

enum class ConstraintFamily { Box, CurveOverlap, MinRadius, MaxGrade, ElevationCorridor };

std::string to_string(ConstraintFamily family);

// One signed violation: <= 0 satisfied, > 0 violated by that many
// meters (or grade units).
struct ConstraintViolation {
    ConstraintFamily family = ConstraintFamily::Box;
    std::size_t index = 0;  // IP / curve / station ordinal within the family
    double value = 0.0;
};

struct ConstraintReport {
    std::vector<ConstraintViolation> violations;
    double worst = 0.0;
    bool feasible = true;
};

// Satisfied constraints still count as violations with value <= 0, so sweeps
// can watch signs flip.
inline constexpr double kFeasibilityTol = 1e-9;

// Adjacent curves may meet but not overlap: for every chord, the tangent
// lengths consumed at its two ends must fit inside the chord.
std::vector<ConstraintViolation> check_overlap(const HorizontalGeometry& geom);

std::vector<ConstraintViolation> check_radius(const AlignmentDesign& design, double min_radius);

// |dz| <= spacing * G_max per station pair; arcs use their horizontal length
// r * |sweep| so curved sections are not exempt.
std::vector<ConstraintViolation> check_grade(const AlignmentDesign& design,
                                             const HorizontalGeometry& geom, double max_grade);

// |z - z_ground| <= corridor at every station.
std::vector<ConstraintViolation> check_elevation_corridor(const AlignmentDesign& design,
                                                          const HorizontalGeometry& geom,
                                                          const TerrainGrid& terrain,
                                                          double corridor);

std::vector<ConstraintViolation> check_boxes(const AlignmentDesign& design,
                                             const ConstraintConfig& config);

ConstraintReport evaluate_constraints(const AlignmentDesign& design,
                                      const HorizontalGeometry& geom, const TerrainGrid& terrain,
                                      const ConstraintConfig& config);

ConstraintReport aggregate(std::vector<ConstraintViolation> violations);

// Exterior quadratic penalty: weight * sum max(0, v)^2. Zero exactly on the
// feasible set.
double penalty(const ConstraintReport& report, double weight);

}  // namespace roadalign
