#include "parabolic/dynamics/normal_form.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "parabolic/dynamics/coordinates.hpp"
#include "parabolic/indices.hpp"

namespace parabolic::dynamics {

void SectorRegion::validate() const {
    if (!(R > 0.0)) throw std::invalid_argument("SectorRegion: R must be positive");
    if (!(N > 1.0)) throw std::invalid_argument("SectorRegion: N must exceed 1");
    if (!(theta > 0.0 && theta < std::numbers::pi / 4.0))
        throw std::invalid_argument("SectorRegion: theta must lie in (0, pi/4)");
}

bool SectorRegion::contains(const Point& xy) const {
    const auto [x, y] = xy;
    return x.real() > R && std::abs(std::arg(x)) < theta && y.real() > R && std::pow(std::abs(y), N) < std::abs(x);
}

double SectorRegion::margin(const Point& xy) const {
    const auto [x, y] = xy;
    if (!is_finite(x) || !is_finite(y)) return -std::numeric_limits<double>::infinity();
    return std::min({(x.real() - R) / R, (theta - std::abs(std::arg(x))) / theta, (y.real() - R) / R,
                     1.0 - std::pow(std::abs(y), N) / std::abs(x)});
}

bool region_V_contains(const Point& xy, const SectorRegion& V) { return V.contains(xy); }

Point sample_V(const SectorRegion& V, std::mt19937_64& rng) {
    V.validate();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
        const Complex y{V.R * (1.0 + unit(rng)), V.R * (2.0 * unit(rng) - 1.0)};
        const double base = std::pow(std::abs(y), V.N);
        const double r = base * (1.0 + 3.0 * unit(rng));
        const double phi = V.theta * (2.0 * unit(rng) - 1.0);
        const Point p{std::polar(r, phi), y};
        if (V.contains(p)) return p;
    }
}

NormalFormMap model_map() {
    return {[](const Point& p) { return Point{p[0] + 1.0, p[1] + 1.0 / p[0]}; }, Exponents{}};
}

NormalFormMap irregular_normal_form(const Germ& f, const CharDirection& dir, double N) {
    const IrregularTransform T(irregular_data(f, dir));
    const Germ g = straightened(f, dir);
    const auto& dat = T.data();
    const double k = dat.k, m = dat.m, n = dat.n, p = dat.n - dat.m - 1;
    Exponents ex;
    if (dat.m == 0) {
        ex = {1.0 / (k - 1), 1.0 / (n - 1), 1.0 / (n - 1), k / (k - 1), n / (n - 1)};
    } else {
        const double s1 = (k * m + k - 1) / ((k - 1) * p);
        const double s2 = (n - m + k - 2 + m * k) / (p * (k - 1));
        ex = {1.0 / (k - 1) - s1 / N, 1.0 / p, s2, k / (k - 1), 1.0 / p};
        if (!(ex.a > 0.0))
            throw std::invalid_argument("irregular_normal_form: N too small for the m > 0 remainder bound");
    }
    PlaneMap map = [T, g](const Point& xy) {
        const Point zu = T.inverse(xy);
        return T.forward(blowup_map(g, Chart::U, zu[0], zu[1]));
    };
    return {std::move(map), ex};
}

namespace {

struct Residual {
    Complex eta1, eta2;
    Point image;
};

Residual residual(const NormalFormMap& G, const Point& xy) {
    const Point img = G.map(xy);
    return {img[0] - xy[0] - 1.0, img[1] - xy[1] - 1.0 / xy[0], img};
}

}  // namespace

ResidualFit fit_residuals(const NormalFormMap& G, const SectorRegion& V, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ResidualFit fit;
    const Exponents& e = G.exponents;
    for (int i = 0; i < samples; ++i) {
        const Point xy = sample_V(V, rng);
        const Residual r = residual(G, xy);
        const double ax = std::abs(xy[0]), ay = std::abs(xy[1]);
        fit.C1 = std::max(fit.C1, std::abs(r.eta1) / (std::pow(ax, -e.a) + std::pow(ay, -e.b)));
        fit.C2 = std::max(fit.C2,
                          std::abs(r.eta2) / (std::pow(ay, e.c) / std::pow(ax, e.d) + 1.0 / (ax * std::pow(ay, e.e))));
        ++fit.samples;
    }
    return fit;
}

InvarianceReport check_V_invariance(const NormalFormMap& G, const SectorRegion& V, int samples, std::uint64_t seed,
                                    bool require_hypothesis) {
    V.validate();
    std::mt19937_64 rng(seed);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) pts.push_back(sample_V(V, rng));

    InvarianceReport rep;
    rep.samples = samples;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    std::vector<Residual> res;
    res.reserve(pts.size());
    for (const auto& p : pts) {
        Residual r;
        try {
            r = residual(G, p);
        } catch (const Error&) {
            const double nan = std::numeric_limits<double>::quiet_NaN();
            r = {Complex(nan, nan), Complex(nan, nan), {Complex(nan, nan), Complex(nan, nan)}};
        }
        const double e1 = std::abs(r.eta1), xe2 = std::abs(p[0]) * std::abs(r.eta2);
        rep.max_eta1 = std::max(rep.max_eta1, e1);
        rep.max_x_eta2 = std::max(rep.max_x_eta2, xe2);
        if (!(e1 < 0.1 && xe2 < 0.1)) rep.hypothesis_ok = false;
        res.push_back(r);
    }
    if (require_hypothesis && !rep.hypothesis_ok)
        throw HypothesisViolation("check_V_invariance: normal-form bounds |eta1| < 1/10, |eta2| < 1/(10|x|) fail");

    for (const auto& r : res) {
        const double mg = V.margin(r.image);
        rep.worst_margin = std::min(rep.worst_margin, mg);
        if (!V.contains(r.image)) ++rep.violations;
    }
    return rep;
}

Point3 Lemma1Lift::pi(const Point& zw) const { return {-s * ipow(zw[0], a) * ipow(zw[1], b), zw[0], zw[1]}; }

Point3 Lemma1Lift::g(const Point3& xzw) const {
    const Point img = f({xzw[1], xzw[2]});
    return {xzw[0] * ipow(img[0] / xzw[1], a) * ipow(img[1] / xzw[2], b), img[0], img[1]};
}

Lemma1Lift lemma1_lift(Complex c, Complex d, int a, int b, PlaneMap f) {
    if (a < 1 || b < 0) throw std::invalid_argument("lemma1_lift: need a >= 1 and b >= 0");
    const Complex s = double(a) * c + double(b) * d;
    if (s == Complex{}) throw std::invalid_argument("lemma1_lift: ac + bd must be nonzero");
    return {c, d, a, b, s, {c / s, d / s}, std::move(f)};
}

LiftCheck verify_lift(const Lemma1Lift& lift, int samples, std::uint64_t seed, double radius) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    LiftCheck chk;
    for (int i = 0; i < samples; ++i) {
        const Point zw{std::polar(radius * (0.5 + 0.5 * unit(rng)), 2.0 * std::numbers::pi * unit(rng)),
                       std::polar(radius * (0.5 + 0.5 * unit(rng)), 2.0 * std::numbers::pi * unit(rng))};
        const Point3 lifted = lift.pi(zw);
        const Point3 up = lift.pi(lift.f(zw));
        const Point3 across = lift.g(lifted);
        double diff = 0.0, mag = 0.0;
        for (int j = 0; j < 3; ++j) {
            diff = std::max(diff, std::abs(up[static_cast<std::size_t>(j)] - across[static_cast<std::size_t>(j)]));
            mag = std::max(mag, std::abs(up[static_cast<std::size_t>(j)]));
        }
        chk.max_commutation = std::max(chk.max_commutation, diff / (1.0 + mag));
        const Complex X = lifted[0];
        chk.max_hakim_defect = std::max(chk.max_hakim_defect, std::abs(across[0] - (X - X * X)) / std::norm(X));
        ++chk.samples;
    }
    return chk;
}

PlaneMap fuchsian_a2_map(const Germ& f, const CharDirection& dir) {
    const FuchsianData data = fuchsian_data(f, dir);
    const Germ g = straightened(f, dir);
    const int m = data.m;
    return [g, m](const Point& xu) {
        const Point zu = inverse_a2(xu, m);
        return transform_a2(blowup_map(g, Chart::U, zu[0], zu[1]), m);
    };
}

}  // namespace parabolic::dynamics
