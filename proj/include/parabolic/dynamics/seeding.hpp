#pragma once

#include <cstdint>
#include <vector>

#include "parabolic/directions.hpp"
#include "parabolic/dynamics/normal_form.hpp"
#include "parabolic/dynamics/orbit.hpp"
#include "parabolic/germ.hpp"

namespace parabolic::dynamics {

struct SeedOptions {
    /// Region of the normal-form coordinates the seeds are drawn from.
    SectorRegion V{50.0, 2.0, std::numbers::pi / 8.0};
    /// Degenerate Fuchsian case: half-opening of the sector Re T > R,
    /// |Arg T| < lift_theta of the inverted lifted coordinate T = 1/X, and
    /// bound on |Arg u|.
    double lift_theta = 0.25;
    /// Degenerate Fuchsian case: |u| = sigma (|X|/|s|)^(1/(a+b)) with sigma
    /// uniform in [sigma_min, sigma_max].
    double sigma_min = 2.0;
    double sigma_max = 3.0;
};

/// Starting points in the original coordinates of F drawn from the basin
/// region that the applicable criterion constructs for dir:
///  - nondegenerate simple directions (Re i_H > 0): z = (-1/(a_0 (k-1) x))^(1/(k-1)),
///    u = 1/y with (x, y) in V;
///  - irregular directions: the inverse irregular transform of points of V;
///  - degenerate Fuchsian directions: points whose Lemma-1 lifted coordinate
///    X = 1/T has T in a sector around the positive real axis.
/// Throws WrongClass for apparent directions.
std::vector<Point> basin_seeds(const Germ& f, const CharDirection& dir, int count, std::uint64_t seed,
                               const SeedOptions& opts = {});

struct ConcordanceReport {
    int samples = 0;
    /// AttractedAlong with final direction nearest to the predicted one.
    int along_predicted = 0;
    int attracted_other = 0;
    int escaped = 0;
    int undecided = 0;
    std::vector<OrbitResult> results;
};

/// Iterates every seed and tallies fates against the predicted direction.
/// An orbit counts as along the predicted direction when it is AttractedAlong
/// and its final direction is within match_tol of dir and no other
/// characteristic direction is closer.
ConcordanceReport concordance(const Germ& f, const CharDirection& dir, const std::vector<Point>& seeds,
                              const OrbitConfig& cfg, double match_tol = 0.2, int threads = 1);

}  // namespace parabolic::dynamics
