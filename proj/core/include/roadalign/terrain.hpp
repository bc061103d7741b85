#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "roadalign/geometry.hpp"

namespace roadalign {

// Elevation samples on a regular lattice, row-major with row 0 at the
// smallest y. Input to the plane-fitting loader.
struct ElevationRaster {
    std::size_t cols = 0;  // samples along x
    std::size_t rows = 0;  // samples along y
    double origin_x = 0.0;
    double origin_y = 0.0;
    double cell_size = 0.0;
    std::vector<double> z;  // rows * cols values

    double at(std::size_t row, std::size_t col) const { return z[row * cols + col]; }
    double& at(std::size_t row, std::size_t col) { return z[row * cols + col]; }
};

// Piecewise-planar ground model over a uniform rectangular grid.
// Each cell (u,v) carries a plane z = A*x + B*y + C. Immutable after load;
// all queries are pure.
class TerrainGrid {
public:
    TerrainGrid() = default;
    TerrainGrid(double origin_x, double origin_y, double cell_size,
                std::size_t n_cols, std::size_t n_rows,
                std::vector<double> a, std::vector<double> b, std::vector<double> c);

    double origin_x() const { return origin_x_; }
    double origin_y() const { return origin_y_; }
    double cell_size() const { return cell_size_; }
    std::size_t n_cols() const { return n_cols_; }
    std::size_t n_rows() const { return n_rows_; }

    double max_x() const { return origin_x_ + cell_size_ * static_cast<double>(n_cols_); }
    double max_y() const { return origin_y_ + cell_size_ * static_cast<double>(n_rows_); }

    bool contains(double x, double y) const;

    // Cell containing (x, y). Cells are half-open [x_u, x_{u+1}) so interior
    // boundary points belong to the higher-index cell; the far footprint
    // edges fold into the last row/column so the query is total on the
    // closed footprint. Throws OutOfBoundsError outside.
    std::pair<std::size_t, std::size_t> cell_of(double x, double y) const;

    // Grid line coordinates x_u = origin_x + u*cell_size, y_v likewise.
    double x_line(std::size_t u) const { return origin_x_ + cell_size_ * static_cast<double>(u); }
    double y_line(std::size_t v) const { return origin_y_ + cell_size_ * static_cast<double>(v); }

    double a(std::size_t u, std::size_t v) const { return a_[v * n_cols_ + u]; }
    double b(std::size_t u, std::size_t v) const { return b_[v * n_cols_ + u]; }
    double c(std::size_t u, std::size_t v) const { return c_[v * n_cols_ + u]; }

    // A*x + B*y + C for the containing cell.
    double ground_elevation(double x, double y) const;

    // Conservative elevation range over the footprint (cell corner extremes).
    double min_elevation() const { return z_min_; }
    double max_elevation() const { return z_max_; }

private:
    void compute_elevation_range();

    double origin_x_ = 0.0;
    double origin_y_ = 0.0;
    double cell_size_ = 0.0;
    std::size_t n_cols_ = 0;
    std::size_t n_rows_ = 0;
    std::vector<double> a_, b_, c_;  // row-major, n_rows * n_cols
    double z_min_ = 0.0;
    double z_max_ = 0.0;
};

// Fit one plane per cell, least squares over the cell's four corner samples.
// Rasters sampled from a single global plane reproduce that plane exactly.
TerrainGrid load_terrain(const ElevationRaster& raster);

// Plain-text grid file: header lines (ncols, nrows, xllcorner, yllcorner,
// cellsize) then row-major sample values, row 0 = southernmost.
ElevationRaster read_raster(std::istream& in);
ElevationRaster read_raster_file(const std::string& path);
void write_raster(std::ostream& out, const ElevationRaster& raster);
void write_raster_file(const std::string& path, const ElevationRaster& raster);

TerrainGrid load_terrain_file(const std::string& path);

}  // namespace roadalign
