#pragma once

#include <optional>
#include <vector>

#include "parabolic/directions.hpp"
#include "parabolic/germ.hpp"
#include "parabolic/types.hpp"

namespace parabolic::dynamics {

struct OrbitConfig {
    long max_iter = 100000;
    /// Attraction requires |F^n(p)| below this and decreasing.
    double attract_radius = 1e-4;
    double escape_radius = 10.0;
    /// Chordal distance within which successive direction estimates must stay.
    double tangency_tol = 1e-3;
    /// Number of consecutive iterates over which the norm must decrease and
    /// the direction must stabilise.
    int direction_window = 50;

    /// Throws std::invalid_argument when the invariants are violated.
    void validate() const;
};

enum class Fate { AttractedAlong, AttractedNoDirection, Escaped, Undecided };

const char* to_string(Fate f);

struct OrbitResult {
    Fate fate = Fate::Undecided;
    long iterations = 0;
    Point final_point{};
    /// Unit representative of [z_n : w_n] at the last iterate (set whenever
    /// the final point is nonzero).
    std::optional<Point> direction;
};

/// Polynomial map of C^2 flattened into monomial lists for fast repeated
/// evaluation. Evaluation order is fixed, so results are bitwise reproducible.
class CompiledMap {
public:
    explicit CompiledMap(const Germ& f);
    Point operator()(const Point& p) const;

private:
    struct Term {
        Complex c;
        int i, j;
    };
    std::vector<Term> t1_, t2_;
    int degree_ = 0;
};

OrbitResult iterate_orbit(const CompiledMap& f, const Point& p0, const OrbitConfig& cfg);
OrbitResult iterate_orbit(const Germ& f, const Point& p0, const OrbitConfig& cfg);

/// Index of the characteristic direction nearest to dir (chordal distance),
/// provided it is within tol.
std::optional<std::size_t> match_direction(const Point& dir, const std::vector<CharDirection>& dirs, double tol);

}  // namespace parabolic::dynamics
