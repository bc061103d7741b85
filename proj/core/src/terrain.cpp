#include "roadalign/terrain.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "roadalign/errors.hpp"

namespace roadalign {

TerrainGrid::TerrainGrid(double origin_x, double origin_y, double cell_size,
                         std::size_t n_cols, std::size_t n_rows,
                         std::vector<double> a, std::vector<double> b, std::vector<double> c)
    : origin_x_(origin_x),
      origin_y_(origin_y),
      cell_size_(cell_size),
      n_cols_(n_cols),
      n_rows_(n_rows),
      a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)) {
    if (n_cols_ < 1 || n_rows_ < 1) throw TerrainError("terrain grid needs at least one cell");
    if (cell_size_ <= 0.0) throw TerrainError("terrain cell size must be positive");
    const std::size_t n = n_cols_ * n_rows_;
    if (a_.size() != n || b_.size() != n || c_.size() != n)
        throw TerrainError("terrain coefficient arrays must be n_rows x n_cols");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(a_[i]) || !std::isfinite(b_[i]) || !std::isfinite(c_[i]))
            throw TerrainError("terrain coefficients must be finite");
    }
    compute_elevation_range();
}

bool TerrainGrid::contains(double x, double y) const {
    return x >= origin_x_ && x <= max_x() && y >= origin_y_ && y <= max_y();
}

std::pair<std::size_t, std::size_t> TerrainGrid::cell_of(double x, double y) const {
    if (!contains(x, y)) {
        std::ostringstream msg;
        msg << "point (" << x << ", " << y << ") outside terrain footprint ["
            << origin_x_ << ", " << max_x() << "] x [" << origin_y_ << ", " << max_y() << "]";
        throw OutOfBoundsError(msg.str());
    }
    auto index = [this](double coord, double origin, std::size_t count) {
        double t = (coord - origin) / cell_size_;
        auto i = static_cast<long long>(std::floor(t));
        if (i < 0) i = 0;
        // points on the far footprint edge fold into the last cell
        if (i >= static_cast<long long>(count)) i = static_cast<long long>(count) - 1;
        return static_cast<std::size_t>(i);
    };
    return {index(x, origin_x_, n_cols_), index(y, origin_y_, n_rows_)};
}

double TerrainGrid::ground_elevation(double x, double y) const {
    auto [u, v] = cell_of(x, y);
    return a(u, v) * x + b(u, v) * y + c(u, v);
}

void TerrainGrid::compute_elevation_range() {
    z_min_ = std::numeric_limits<double>::infinity();
    z_max_ = -std::numeric_limits<double>::infinity();
    for (std::size_t v = 0; v < n_rows_; ++v) {
        for (std::size_t u = 0; u < n_cols_; ++u) {
            // plane extremes over a cell occur at its corners
            for (int dx = 0; dx <= 1; ++dx) {
                for (int dy = 0; dy <= 1; ++dy) {
                    double x = x_line(u + static_cast<std::size_t>(dx));
                    double y = y_line(v + static_cast<std::size_t>(dy));
                    double z = a(u, v) * x + b(u, v) * y + c(u, v);
                    z_min_ = std::min(z_min_, z);
                    z_max_ = std::max(z_max_, z);
                }
            }
        }
    }
}

TerrainGrid load_terrain(const ElevationRaster& raster) {
    if (raster.cols < 2 || raster.rows < 2)
        throw TerrainError("raster needs at least 2x2 samples");
    if (raster.cell_size <= 0.0) throw TerrainError("raster cell size must be positive");
    if (raster.z.size() != raster.cols * raster.rows)
        throw TerrainError("raster value count disagrees with declared dimensions");
    for (double z : raster.z) {
        if (!std::isfinite(z)) throw TerrainError("raster contains NaN or missing samples");
    }

    const std::size_t n_cols = raster.cols - 1;
    const std::size_t n_rows = raster.rows - 1;
    std::vector<double> a(n_cols * n_rows), b(n_cols * n_rows), c(n_cols * n_rows);

    const double h = raster.cell_size;
    for (std::size_t v = 0; v < n_rows; ++v) {
        for (std::size_t u = 0; u < n_cols; ++u) {
            const double z00 = raster.at(v, u);
            const double z10 = raster.at(v, u + 1);
            const double z01 = raster.at(v + 1, u);
            const double z11 = raster.at(v + 1, u + 1);
            // Least-squares plane through the four corners of a square cell.
            // About the cell centroid the normal equations decouple, giving
            // the corner-difference slopes below.
            const double av = ((z10 + z11) - (z00 + z01)) / (2.0 * h);
            const double bv = ((z01 + z11) - (z00 + z10)) / (2.0 * h);
            const double cx = raster.origin_x + h * (static_cast<double>(u) + 0.5);
            const double cy = raster.origin_y + h * (static_cast<double>(v) + 0.5);
            const double zbar = 0.25 * (z00 + z10 + z01 + z11);
            a[v * n_cols + u] = av;
            b[v * n_cols + u] = bv;
            c[v * n_cols + u] = zbar - av * cx - bv * cy;
        }
    }
    return TerrainGrid(raster.origin_x, raster.origin_y, raster.cell_size,
                       n_cols, n_rows, std::move(a), std::move(b), std::move(c));
}

namespace {

// Header keys are case-insensitive; order is fixed.
double parse_header_line(std::istream& in, const std::string& expected_key) {
    std::string key;
    double value = 0.0;
    if (!(in >> key >> value)) throw TerrainError("truncated terrain header, expected " + expected_key);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (key != expected_key)
        throw TerrainError("bad terrain header: expected '" + expected_key + "', got '" + key + "'");
    return value;
}

}  // namespace

ElevationRaster read_raster(std::istream& in) {
    ElevationRaster raster;
    const double ncols = parse_header_line(in, "ncols");
    const double nrows = parse_header_line(in, "nrows");
    raster.origin_x = parse_header_line(in, "xllcorner");
    raster.origin_y = parse_header_line(in, "yllcorner");
    raster.cell_size = parse_header_line(in, "cellsize");
    if (ncols < 2 || nrows < 2 || ncols != std::floor(ncols) || nrows != std::floor(nrows))
        throw TerrainError("terrain header ncols/nrows must be integers >= 2");
    raster.cols = static_cast<std::size_t>(ncols);
    raster.rows = static_cast<std::size_t>(nrows);

    raster.z.reserve(raster.cols * raster.rows);
    double z;
    while (in >> z) raster.z.push_back(z);
    if (raster.z.size() != raster.cols * raster.rows) {
        std::ostringstream msg;
        msg << "terrain file declares " << raster.cols * raster.rows << " samples but contains "
            << raster.z.size();
        throw TerrainError(msg.str());
    }
    return raster;
}

ElevationRaster read_raster_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TerrainError("cannot open terrain file: " + path);
    return read_raster(in);
}

void write_raster(std::ostream& out, const ElevationRaster& raster) {
    out << "ncols " << raster.cols << "\n";
    out << "nrows " << raster.rows << "\n";
    char buf[64];
    auto put = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf;
    };
    out << "xllcorner ";
    put(raster.origin_x);
    out << "\nyllcorner ";
    put(raster.origin_y);
    out << "\ncellsize ";
    put(raster.cell_size);
    out << "\n";
    for (std::size_t r = 0; r < raster.rows; ++r) {
        for (std::size_t c = 0; c < raster.cols; ++c) {
            if (c) out << ' ';
            put(raster.at(r, c));
        }
        out << "\n";
    }
}

void write_raster_file(const std::string& path, const ElevationRaster& raster) {
    std::ofstream out(path);
    if (!out) throw TerrainError("cannot write terrain file: " + path);
    write_raster(out, raster);
}

TerrainGrid load_terrain_file(const std::string& path) { return load_terrain(read_raster_file(path)); }

}  // namespace roadalign
