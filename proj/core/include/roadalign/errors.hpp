#pragma once

#include <stdexcept>
#include <string>

namespace roadalign {

// Error categories map 1:1 onto the CLI exit codes.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct TerrainError : std::runtime_error {
    explicit TerrainError(const std::string& what) : std::runtime_error(what) {}
};

// Point fell outside the terrain footprint.
struct OutOfBoundsError : TerrainError {
    explicit OutOfBoundsError(const std::string& what) : TerrainError(what) {}
};

// Coincident IPs, near-U-turn angles and similar unusable designs.
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

struct SeedingError : std::runtime_error {
    explicit SeedingError(const std::string& what) : std::runtime_error(what) {}
};

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace roadalign
