#include "parabolic/criteria.hpp"

#include <stdexcept>

namespace parabolic {
namespace {

// Combines "x > 0" style margins: every margin must be positive; any margin
// within kBoundaryTol of zero (and none clearly negative) is undecided.
Membership all_positive(std::initializer_list<double> margins) {
    bool boundary = false;
    for (double g : margins) {
        if (g < -kBoundaryTol) return Membership::Outside;
        if (g <= kBoundaryTol) boundary = true;
    }
    return boundary ? Membership::Boundary : Membership::Inside;
}

}  // namespace

const char* to_string(Membership m) {
    switch (m) {
        case Membership::Outside: return "false";
        case Membership::Inside: return "true";
        case Membership::Boundary: return "boundary";
    }
    return "?";
}

double RegionR::half_plane_bound() const { return -static_cast<double>(m) / (k - 1); }
double RegionR::circle_center() const { return (m + 1 - static_cast<double>(m) / (k - 1)) / 2.0; }
double RegionR::circle_radius() const { return (m + 1 + static_cast<double>(m) / (k - 1)) / 2.0; }

Membership RegionR::contains(Complex zeta) const {
    if (k < 2) throw std::invalid_argument("RegionR: k must be >= 2");
    return all_positive({zeta.real() - half_plane_bound(), std::abs(zeta - circle_center()) - circle_radius()});
}

double RegionS::center() const { return 1.0 / (2.0 * (m + 1)); }
double RegionS::radius() const { return 1.0 / (2.0 * (m + 1)); }

Membership RegionS::contains(Complex zeta) const { return all_positive({radius() - std::abs(zeta - center())}); }

Membership in_region_R(Complex zeta, int m, int k) { return RegionR{m, k}.contains(zeta); }
Membership in_region_S(Complex zeta, int m) { return RegionS{m}.contains(zeta); }

Membership lemma1_membership(Complex c, Complex d, double a, double b) {
    if (d == Complex{}) throw std::invalid_argument("lemma1_condition: d must be nonzero");
    if (!(a > 0.0)) throw std::invalid_argument("lemma1_condition: a must be positive");
    const Complex t = c / d;
    const double h = b / (2.0 * a);
    return all_positive({t.real() + b / a, std::abs(t + h) - h});
}

bool lemma1_condition(Complex c, Complex d, double a, double b) {
    return lemma1_membership(c, d, a, b) == Membership::Inside;
}

std::array<Complex, 2> lemma1_eigenvalues(Complex c, Complex d, double a, double b) {
    const Complex s = a * c + b * d;
    if (s == Complex{}) throw std::invalid_argument("lemma1_eigenvalues: ac + bd must be nonzero");
    return {c / s, d / s};
}

bool eigenvalue_condition(std::span<const Complex> alphas) {
    if (alphas.empty()) throw std::invalid_argument("eigenvalue_condition: empty list");
    for (const Complex& a : alphas)
        if (!(a.real() > 0.0)) return false;
    return true;
}

const char* to_string(Conclusion c) {
    switch (c) {
        case Conclusion::BasinExists: return "BasinExists";
        case Conclusion::NoBasinAlongDirection: return "NoBasinAlongDirection";
        case Conclusion::Unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(Justification j) {
    switch (j) {
        case Justification::HakimTheorem: return "HakimTheorem";
        case Justification::Theorem1_Irregular: return "Theorem1_Irregular";
        case Justification::Theorem2_FuchsianR: return "Theorem2_FuchsianR";
        case Justification::RegularCaseS: return "RegularCaseS";
        case Justification::NegativeHakimRemark: return "NegativeHakimRemark";
        case Justification::ApparentUndecided: return "ApparentUndecided";
        case Justification::DicriticalOutOfScope: return "DicriticalOutOfScope";
        case Justification::BoundaryInconclusive: return "BoundaryInconclusive";
        case Justification::NoCriterionApplies: return "NoCriterionApplies";
    }
    return "?";
}

Verdict verdict(const Germ& f, const CharDirection& dir, const IndexReport& idx) {
    using enum Conclusion;
    using enum Justification;
    if (!dir.degenerate && dir.n == 1) {
        const Complex ih = idx.hakim ? *idx.hakim : hakim_index(f, dir);
        if (ih.real() > kBoundaryTol) return {BasinExists, HakimTheorem, ih};
        if (ih.real() < -kBoundaryTol) return {NoBasinAlongDirection, NegativeHakimRemark, ih};
        return {Unknown, BoundaryInconclusive, ih};
    }
    switch (dir.cls) {
        case DirectionClass::Irregular: return {BasinExists, Theorem1_Irregular, idx.abate};
        case DirectionClass::Apparent: return {Unknown, ApparentUndecided, idx.abate};
        case DirectionClass::Fuchsian: break;
    }
    // Degenerate Fuchsian: 1 <= m = n - 1.
    const Complex zeta = idx.abate;
    const int m = *dir.m;
    const Membership in_r = in_region_R(zeta, m, f.order());
    if (in_r == Membership::Inside) return {BasinExists, Theorem2_FuchsianR, zeta};
    const bool regular = idx.regular.value_or(false);
    const Membership in_s = in_region_S(zeta, m);
    if (regular && in_s == Membership::Inside) return {BasinExists, RegularCaseS, zeta};
    if (in_r == Membership::Boundary || (regular && in_s == Membership::Boundary))
        return {Unknown, BoundaryInconclusive, zeta};
    return {Unknown, NoCriterionApplies, zeta};
}

Verdict verdict(const Germ& f, const CharDirection& dir) { return verdict(f, dir, compute_indices(f, dir)); }

Verdict verdict(const Germ& f, Chart chart, Complex u0) {
    try {
        return verdict(f, analyze_direction(f, chart, u0));
    } catch (const Dicritical&) {
        return {Conclusion::Unknown, Justification::DicriticalOutOfScope, std::nullopt};
    }
}

}  // namespace parabolic
