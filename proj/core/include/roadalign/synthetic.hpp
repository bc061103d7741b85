#pragma once

#include <cstdint>
#include <string>

#include "roadalign/terrain.hpp"

namespace roadalign {

enum class TerrainKind { Plane, Ridge, Valley, Hills };

TerrainKind terrain_kind_from_string(const std::string& name);
std::string to_string(TerrainKind kind);

// Knobs for the synthetic terrains that stand in for survey data.
struct SyntheticTerrainSpec {
    TerrainKind kind = TerrainKind::Hills;
    double width = 500.0;    // extent along x, meters
    double height = 1000.0;  // extent along y, meters
    double cell_size = 10.0;
    double base_elevation = 100.0;
    double amplitude = 10.0;    // ridge height / hill amplitude
    double wavelength = 200.0;  // hills period / ridge half-width scale
    double slope_x = 0.0;       // plane gradients
    double slope_y = 0.0;
    std::uint64_t seed = 0;  // randomizes hill phases; same seed, same bytes
};

// Samples the analytic surface on a (width/cell+1) x (height/cell+1) lattice.
ElevationRaster generate_raster(const SyntheticTerrainSpec& spec);

}  // namespace roadalign
