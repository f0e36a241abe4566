#include "parabolic/indices.hpp"

#include <algorithm>
#include <limits>

#include "parabolic/residue.hpp"
#include "parabolic/roots.hpp"

namespace parabolic {

Complex hakim_index(const Germ& f, const CharDirection& dir) {
    if (dir.degenerate) throw DegenerateDirection("Hakim index is defined only for nondegenerate directions");
    const ChartPolys cp = chart_polys(f, dir.chart);
    return cp.r.derivative_at(dir.u0, 1) / cp.p(dir.u0);
}

Complex abate_index(const Germ& f, const CharDirection& dir) {
    if (dir.cls == DirectionClass::Apparent) return {};
    const ChartPolys cp = chart_polys(f, dir.chart);
    if (cp.r.is_negligible(cp.scale)) throw Dicritical("Abate index undefined: germ is dicritical");
    return series_residue(cp.p, cp.r, dir.u0);
}

Complex abate_index_contour(const Germ& f, const CharDirection& dir, int nodes) {
    const ChartPolys cp = chart_polys(f, dir.chart);
    if (cp.r.is_negligible(cp.scale)) throw Dicritical("Abate index undefined: germ is dicritical");
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& root : roots_with_multiplicity(cp.r)) {
        const double d = std::abs(root.value - dir.u0);
        if (d > 1e-6 * (1.0 + std::abs(dir.u0))) nearest = std::min(nearest, d);
    }
    const double radius = std::isfinite(nearest) ? 0.5 * nearest : 0.5;
    return contour_residue([&](Complex u) { return cp.p(u) / cp.r(u); }, dir.u0, radius, nodes);
}

Germ straightened(const Germ& f, const CharDirection& dir) {
    const Germ g = dir.chart == Chart::U ? f : f.swapped();
    return g.sheared(dir.u0);
}

Regularity rho_regularity(const Germ& f, const CharDirection& dir) {
    if (!dir.degenerate || dir.cls != DirectionClass::Fuchsian || !dir.m)
        throw WrongClass("rho is defined only for degenerate Fuchsian directions");
    const Germ g = straightened(f, dir);
    const BlowupExpansion e = blowup_expand(g, Chart::U, 1);
    const int k = e.k;
    const Complex a_m = e.comp1[0].coeff(*dir.m);
    const Complex rho_raw = e.comp2[1].coeff(0);
    const double scale =
        std::max({e.comp1[0].max_abs_coeff(), e.comp2[0].max_abs_coeff(), e.comp2[1].max_abs_coeff()});
    // Rescaling (z, w) -> (c z, c w) multiplies a_m by c^(k-1) and rho by c^k.
    const Complex c = std::pow(1.0 / a_m, 1.0 / (k - 1));
    return {ipow(c, k) * rho_raw, std::abs(rho_raw) > zero_threshold(scale)};
}

IndexReport compute_indices(const Germ& f, const CharDirection& dir) {
    IndexReport rep;
    if (!dir.degenerate) rep.hakim = hakim_index(f, dir);
    rep.abate = abate_index(f, dir);
    rep.abate_contour = abate_index_contour(f, dir);
    if (dir.degenerate && dir.cls == DirectionClass::Fuchsian && dir.m) {
        const Regularity reg = rho_regularity(f, dir);
        rep.rho = reg.rho;
        rep.regular = reg.regular;
    }
    return rep;
}

}  // namespace parabolic
