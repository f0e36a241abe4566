#pragma once

#include <vector>

#include "parabolic/types.hpp"
#include "parabolic/unipoly.hpp"

namespace parabolic {

struct Root {
    Complex value;
    int multiplicity = 1;
};

/// Default relative radius under which approximate roots are always merged.
inline constexpr double kRootClusterTol = 1e-8;

/// All roots of p with multiplicities. Coefficients below the scale-aware zero
/// threshold at either end are treated as zero (roots at 0, roots at infinity
/// dropped), so the multiplicities sum to the effective degree.
///
/// Roots come from Weierstrass (Durand-Kerner) iteration on the monic
/// normalisation. Approximations closer than tol * (1 + |root|) are merged;
/// nearby clusters are also merged when p vanishes at the merged centroid to
/// the merged order, which recognises multiple roots split by rounding. Each
/// reported root is polished by Newton's method on p^(mult-1).
///
/// Throws std::invalid_argument for the zero polynomial and IllConditioned
/// when the iteration fails to settle.
std::vector<Root> roots_with_multiplicity(const UniPoly& p, double tol = kRootClusterTol);

}  // namespace parabolic
