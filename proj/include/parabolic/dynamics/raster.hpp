#pragma once

#include <ostream>
#include <vector>

#include "parabolic/directions.hpp"
#include "parabolic/dynamics/orbit.hpp"
#include "parabolic/germ.hpp"

namespace parabolic::dynamics {

/// Real 2-plane origin + s e1 + t e2 of C^2 sampled on a width x height grid
/// with s, t in [-extent, extent]. Row 0 is t = +extent.
struct Slice {
    Point origin{};
    Point e1{Complex(1.0), Complex(0.0)};
    Point e2{Complex(0.0), Complex(1.0)};
    int width = 64;
    int height = 64;
    double extent = 0.1;

    /// Throws std::invalid_argument for empty grids or a non-positive extent.
    void validate() const;
    Point pixel(int row, int col) const;
};

/// Fate codes stored in a grid.
enum FateCode : int {
    kUndecided = 0,
    kEscaped = 1,
    kAttractedOther = 2,
    /// kAttractedDirection + j: attracted along characteristic direction j.
    kAttractedDirection = 3,
};

struct FateGrid {
    int width = 0;
    int height = 0;
    /// Row-major fate codes and iteration counts.
    std::vector<int> code;
    std::vector<long> iterations;

    int at(int row, int col) const { return code[static_cast<std::size_t>(row) * width + col]; }
    friend bool operator==(const FateGrid&, const FateGrid&) = default;
};

struct RasterOptions {
    OrbitConfig orbit;
    /// Worker threads; rows are handed out dynamically, results are written
    /// to fixed slots so the grid does not depend on the schedule.
    int threads = 1;
    /// Chordal distance within which an attracted orbit's final direction is
    /// attributed to a characteristic direction.
    double match_tol = 0.2;
};

/// Pixel fate code for one orbit result.
int fate_code(const OrbitResult& r, const std::vector<CharDirection>& dirs, double match_tol);

FateGrid raster_slice(const Germ& f, const Slice& slice, const RasterOptions& opts);

/// Binary PPM (P6): escaped white, undecided black, attracted-without-match
/// gray, attracted along direction j a fixed palette colour cycled by j.
void write_ppm(const FateGrid& grid, std::ostream& out);
/// CSV with header row,col,fate_code,iterations.
void write_csv(const FateGrid& grid, std::ostream& out);

}  // namespace parabolic::dynamics
