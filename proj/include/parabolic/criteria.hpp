#pragma once

#include <array>
#include <optional>
#include <span>

#include "parabolic/directions.hpp"
#include "parabolic/germ.hpp"
#include "parabolic/indices.hpp"

namespace parabolic {

/// Distance from a boundary below which a region test is undecided.
inline constexpr double kBoundaryTol = 1e-9;

enum class Membership { Outside, Inside, Boundary };

const char* to_string(Membership m);

/// Region of the index plane of the degenerate Fuchsian theorem:
/// Re(zeta) > -m/(k-1) and zeta outside the closed disc through -m/(k-1)
/// and m+1.
struct RegionR {
    int m = 0;
    int k = 2;

    double half_plane_bound() const;
    double circle_center() const;
    double circle_radius() const;
    Membership contains(Complex zeta) const;
};

/// Open disc |zeta - 1/(2(m+1))| < 1/(2(m+1)) of the regular case.
struct RegionS {
    int m = 0;

    double center() const;
    double radius() const;
    Membership contains(Complex zeta) const;
};

Membership in_region_R(Complex zeta, int m, int k);
Membership in_region_S(Complex zeta, int m);

/// With t = c/d: Re t > -b/a and |t + b/(2a)| > b/(2a) (tri-state).
/// Throws std::invalid_argument when d == 0 or a <= 0.
Membership lemma1_membership(Complex c, Complex d, double a, double b);
bool lemma1_condition(Complex c, Complex d, double a, double b);

/// Diagonal entries c/(ac+bd), d/(ac+bd) of the linear part of the lifted
/// map. Throws std::invalid_argument when ac + bd == 0.
std::array<Complex, 2> lemma1_eigenvalues(Complex c, Complex d, double a, double b);

/// True iff every Re(alpha) > 0. Throws std::invalid_argument on empty input.
bool eigenvalue_condition(std::span<const Complex> alphas);

enum class Conclusion { BasinExists, NoBasinAlongDirection, Unknown };

enum class Justification {
    HakimTheorem,
    Theorem1_Irregular,
    Theorem2_FuchsianR,
    RegularCaseS,
    NegativeHakimRemark,
    ApparentUndecided,
    DicriticalOutOfScope,
    BoundaryInconclusive,
    /// Degenerate Fuchsian direction whose index lies in neither R nor S
    /// (or in S without regularity).
    NoCriterionApplies,
};

const char* to_string(Conclusion c);
const char* to_string(Justification j);

struct Verdict {
    Conclusion conclusion = Conclusion::Unknown;
    Justification justification = Justification::NoCriterionApplies;
    /// i_H for nondegenerate simple directions, Ind otherwise; empty for
    /// dicritical germs.
    std::optional<Complex> tested_value;
};

/// Decision tree over the direction's class, degeneracy and indices.
Verdict verdict(const Germ& f, const CharDirection& dir, const IndexReport& idx);
Verdict verdict(const Germ& f, const CharDirection& dir);
/// Analyses the direction first; dicritical germs give DicriticalOutOfScope.
/// Throws DirectionNotCharacteristic.
Verdict verdict(const Germ& f, Chart chart, Complex u0);

}  // namespace parabolic
