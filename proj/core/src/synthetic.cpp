#include "roadalign/synthetic.hpp"

#include <cmath>
#include <random>

#include "roadalign/errors.hpp"

namespace roadalign {

TerrainKind terrain_kind_from_string(const std::string& name) {
    if (name == "plane") return TerrainKind::Plane;
    if (name == "ridge") return TerrainKind::Ridge;
    if (name == "valley") return TerrainKind::Valley;
    if (name == "hills") return TerrainKind::Hills;
    throw ConfigError("unknown terrain kind: " + name + " (expected plane|ridge|valley|hills)");
}

std::string to_string(TerrainKind kind) {
    switch (kind) {
        case TerrainKind::Plane: return "plane";
        case TerrainKind::Ridge: return "ridge";
        case TerrainKind::Valley: return "valley";
        case TerrainKind::Hills: return "hills";
    }
    return "?";
}

ElevationRaster generate_raster(const SyntheticTerrainSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0 || spec.cell_size <= 0)
        throw ConfigError("terrain extent and cell size must be positive");
    const auto cols = static_cast<std::size_t>(std::llround(spec.width / spec.cell_size)) + 1;
    const auto rows = static_cast<std::size_t>(std::llround(spec.height / spec.cell_size)) + 1;
    if (cols < 2 || rows < 2) throw ConfigError("terrain must span at least one cell");

    ElevationRaster raster;
    raster.cols = cols;
    raster.rows = rows;
    raster.origin_x = 0.0;
    raster.origin_y = 0.0;
    raster.cell_size = spec.cell_size;
    raster.z.resize(cols * rows);

    // ridge runs along y at the footprint's x midline
    const double ridge_center = spec.width / 2.0;
    const double sigma = spec.wavelength > 0 ? spec.wavelength / 2.0 : spec.width / 4.0;

    // Hills superpose a few seeded sinusoids so different seeds give
    // different (but reproducible) landscapes.
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
    struct Wave {
        double kx, ky, phi, amp;
    };
    std::vector<Wave> waves;
    if (spec.kind == TerrainKind::Hills) {
        const double k0 = 2.0 * kPi / spec.wavelength;
        waves.push_back({k0, k0, phase(rng), 1.0});
        waves.push_back({k0 * 0.5, k0 * 1.3, phase(rng), 0.6});
        waves.push_back({k0 * 1.7, k0 * 0.4, phase(rng), 0.35});
    }

    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const double x = spec.cell_size * static_cast<double>(c);
            const double y = spec.cell_size * static_cast<double>(r);
            double z = spec.base_elevation + spec.slope_x * x + spec.slope_y * y;
            switch (spec.kind) {
                case TerrainKind::Plane:
                    break;
                case TerrainKind::Ridge:
                    z += spec.amplitude * std::exp(-0.5 * std::pow((x - ridge_center) / sigma, 2));
                    break;
                case TerrainKind::Valley:
                    z -= spec.amplitude * std::exp(-0.5 * std::pow((x - ridge_center) / sigma, 2));
                    break;
                case TerrainKind::Hills: {
                    double sum = 0.0;
                    double norm = 0.0;
                    for (const Wave& w : waves) {
                        sum += w.amp * std::sin(w.kx * x + w.phi) * std::sin(w.ky * y + w.phi * 0.7);
                        norm += w.amp;
                    }
                    z += spec.amplitude * sum / norm;
                    break;
                }
            }
            raster.at(r, c) = z;
        }
    }
    return raster;
}

}  // namespace roadalign
