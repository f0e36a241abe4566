#include "parabolic/directions.hpp"

#include <algorithm>

#include "parabolic/roots.hpp"

namespace parabolic {
namespace {

// Drops coefficients that are zero at the given scale, so the root finder and
// the chart bookkeeping see the same effective polynomial.
UniPoly cleaned(const UniPoly& p, double scale) {
    std::vector<Complex> c = p.coeffs();
    for (auto& x : c)
        if (std::abs(x) <= zero_threshold(scale)) x = Complex{};
    return UniPoly(std::move(c));
}

bool is_dicritical(const ChartPolys& cp) { return cp.r.is_negligible(cp.scale); }

}  // namespace

const char* to_string(DirectionClass c) {
    switch (c) {
        case DirectionClass::Fuchsian: return "Fuchsian";
        case DirectionClass::Irregular: return "Irregular";
        case DirectionClass::Apparent: return "Apparent";
    }
    return "?";
}

DirectionClass classify(VanishingOrder m, int n) {
    if (!m) return DirectionClass::Apparent;
    if (1 + *m == n) return DirectionClass::Fuchsian;
    if (1 + *m < n) return DirectionClass::Irregular;
    return DirectionClass::Apparent;
}

std::pair<VanishingOrder, int> vanishing_orders(const Germ& f, Chart chart, Complex u0) {
    const ChartPolys cp = chart_polys(f, chart);
    if (is_dicritical(cp)) throw Dicritical("germ is dicritical: every direction is characteristic");

    const UniPoly rs = cp.r.shifted(u0);
    const auto n = rs.vanishing_order(std::max(cp.scale, rs.max_abs_coeff()));
    if (!n || *n == 0) throw DirectionNotCharacteristic("direction is not characteristic (r does not vanish there)");

    VanishingOrder m;
    if (!cp.p.is_negligible(cp.scale)) {
        const UniPoly ps = cp.p.shifted(u0);
        m = ps.vanishing_order(std::max(cp.scale, ps.max_abs_coeff()));
    }
    return {m, *n};
}

CharDirection analyze_direction(const Germ& f, Chart chart, Complex u0) {
    const auto [m, n] = vanishing_orders(f, chart, u0);
    CharDirection d;
    d.chart = chart;
    d.u0 = u0;
    d.multiplicity = n;
    d.m = m;
    d.n = n;
    d.degenerate = !m || *m >= 1;
    d.lambda = d.degenerate ? Complex{} : chart_polys(f, chart).p(u0);
    d.cls = classify(m, n);
    return d;
}

DirectionReport characteristic_directions(const Germ& f) {
    DirectionReport rep;
    rep.k = f.order();
    const ChartPolys cu = chart_polys(f, Chart::U);
    if (is_dicritical(cu)) {
        rep.dicritical = true;
        return rep;
    }
    const ChartPolys cv = chart_polys(f, Chart::V);

    const auto roots_u = roots_with_multiplicity(cleaned(cu.r, cu.scale));
    const auto roots_v = roots_with_multiplicity(cleaned(cv.r, cv.scale));

    std::vector<Root> kept_u;
    for (const auto& r : roots_u)
        if (std::abs(r.value) <= 1.0) kept_u.push_back(r);
    std::vector<Root> kept_v;
    for (const auto& r : roots_v) {
        if (std::abs(r.value) >= 1.0) continue;
        const bool seen = std::any_of(kept_u.begin(), kept_u.end(),
                                      [&](const Root& x) { return std::abs(x.value * r.value - 1.0) < 1e-6; });
        if (!seen) kept_v.push_back(r);
    }

    auto add = [&](Chart chart, const Root& r) {
        // The root finder reports a root at exactly 0 for [0:1]; snap tiny
        // values produced by polishing there too.
        const Complex u0 = std::abs(r.value) <= zero_threshold(0.0) ? Complex{} : r.value;
        CharDirection d = analyze_direction(f, chart, u0);
        d.multiplicity = r.multiplicity;
        rep.directions.push_back(d);
    };
    for (const auto& r : kept_u) add(Chart::U, r);
    for (const auto& r : kept_v) add(Chart::V, r);

    std::sort(rep.directions.begin(), rep.directions.end(), [](const CharDirection& a, const CharDirection& b) {
        if (a.chart != b.chart) return a.chart == Chart::U;
        if (a.u0.real() != b.u0.real()) return a.u0.real() < b.u0.real();
        return a.u0.imag() < b.u0.imag();
    });
    return rep;
}

double projective_distance(const Point& a, const Point& b) {
    const double na = norm2(a), nb = norm2(b);
    if (na == 0.0 || nb == 0.0) return 1.0;
    return std::abs(a[0] * b[1] - a[1] * b[0]) / (na * nb);
}

}  // namespace parabolic
