#include "parabolic/dynamics/raster.hpp"

#include <array>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace parabolic::dynamics {

void Slice::validate() const {
    if (width < 1 || height < 1) throw std::invalid_argument("Slice: width and height must be positive");
    if (!(extent > 0.0)) throw std::invalid_argument("Slice: extent must be positive");
}

Point Slice::pixel(int row, int col) const {
    const double s = -extent + (col + 0.5) * 2.0 * extent / width;
    const double t = extent - (row + 0.5) * 2.0 * extent / height;
    return {origin[0] + s * e1[0] + t * e2[0], origin[1] + s * e1[1] + t * e2[1]};
}

int fate_code(const OrbitResult& r, const std::vector<CharDirection>& dirs, double match_tol) {
    switch (r.fate) {
        case Fate::Escaped: return kEscaped;
        case Fate::Undecided: return kUndecided;
        case Fate::AttractedNoDirection: return kAttractedOther;
        case Fate::AttractedAlong: break;
    }
    if (!r.direction) return kAttractedOther;
    const auto j = match_direction(*r.direction, dirs, match_tol);
    return j ? kAttractedDirection + static_cast<int>(*j) : kAttractedOther;
}

FateGrid raster_slice(const Germ& f, const Slice& slice, const RasterOptions& opts) {
    slice.validate();
    opts.orbit.validate();
    const CompiledMap map(f);
    const std::vector<CharDirection> dirs = characteristic_directions(f).directions;

    FateGrid grid;
    grid.width = slice.width;
    grid.height = slice.height;
    const auto cells = static_cast<std::size_t>(slice.width) * static_cast<std::size_t>(slice.height);
    grid.code.assign(cells, kUndecided);
    grid.iterations.assign(cells, 0);

    std::atomic<int> next_row{0};
    auto worker = [&] {
        for (int row = next_row++; row < slice.height; row = next_row++) {
            for (int col = 0; col < slice.width; ++col) {
                const Point p = slice.pixel(row, col);
                const std::size_t idx = static_cast<std::size_t>(row) * slice.width + col;
                if (norm2(p) == 0.0) {
                    grid.code[idx] = kAttractedOther;
                    continue;
                }
                const OrbitResult r = iterate_orbit(map, p, opts.orbit);
                grid.code[idx] = fate_code(r, dirs, opts.match_tol);
                grid.iterations[idx] = r.iterations;
            }
        }
    };
    const int threads = std::max(1, opts.threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return grid;
}

namespace {

using Rgb = std::array<unsigned char, 3>;

Rgb colour(int code) {
    static constexpr std::array<Rgb, 6> palette{{
        {230, 25, 75},
        {60, 180, 75},
        {0, 130, 200},
        {245, 130, 48},
        {145, 30, 180},
        {70, 240, 240},
    }};
    switch (code) {
        case kUndecided: return {0, 0, 0};
        case kEscaped: return {255, 255, 255};
        case kAttractedOther: return {128, 128, 128};
        default: return palette[static_cast<std::size_t>(code - kAttractedDirection) % palette.size()];
    }
}

}  // namespace

void write_ppm(const FateGrid& grid, std::ostream& out) {
    out << "P6\n" << grid.width << ' ' << grid.height << "\n255\n";
    for (int code : grid.code) {
        const Rgb c = colour(code);
        out.write(reinterpret_cast<const char*>(c.data()), 3);
    }
}

void write_csv(const FateGrid& grid, std::ostream& out) {
    out << "row,col,fate_code,iterations\n";
    for (int row = 0; row < grid.height; ++row)
        for (int col = 0; col < grid.width; ++col) {
            const std::size_t idx = static_cast<std::size_t>(row) * grid.width + col;
            out << row << ',' << col << ',' << grid.code[idx] << ',' << grid.iterations[idx] << '\n';
        }
}

}  // namespace parabolic::dynamics
