#include "parabolic/germ.hpp"

#include <algorithm>

namespace parabolic {

const char* to_string(GermDefect d) {
    switch (d) {
        case GermDefect::NotFixingOrigin: return "NotFixingOrigin";
        case GermDefect::NotTangentToIdentity: return "NotTangentToIdentity";
        case GermDefect::IsIdentity: return "IsIdentity";
    }
    return "?";
}

Germ Germ::validate(BiPoly f1, BiPoly f2) {
    if (f1.coeff(0, 0) != Complex{} || f2.coeff(0, 0) != Complex{})
        throw GermValidationError(GermDefect::NotFixingOrigin, "germ does not fix the origin (constant term present)");
    if (f1.coeff(1, 0) != Complex(1.0) || f1.coeff(0, 1) != Complex{} || f2.coeff(1, 0) != Complex{} ||
        f2.coeff(0, 1) != Complex(1.0))
        throw GermValidationError(GermDefect::NotTangentToIdentity, "linear part of the germ is not the identity");
    const int deg = std::max(f1.degree(), f2.degree());
    for (int d = 2; d <= deg; ++d)
        if (!f1.homogeneous_part(d).is_zero() || !f2.homogeneous_part(d).is_zero())
            return Germ(std::move(f1), std::move(f2), d);
    throw GermValidationError(GermDefect::IsIdentity, "germ is the identity");
}

int Germ::degree() const { return std::max(f1_.degree(), f2_.degree()); }

std::pair<BiPoly, BiPoly> Germ::homogeneous_part(int d) const {
    if (d < 2) return {};
    return {f1_.homogeneous_part(d), f2_.homogeneous_part(d)};
}

Point Germ::operator()(const Point& p) const { return {f1_(p[0], p[1]), f2_(p[0], p[1])}; }

Germ Germ::swapped() const { return Germ(f2_.swapped(), f1_.swapped(), order_); }

Germ Germ::conjugated(const Mat2& L, int max_degree) const {
    const Complex det = L[0][0] * L[1][1] - L[0][1] * L[1][0];
    if (det == Complex{}) throw std::invalid_argument("Germ::conjugated: singular matrix");
    const Mat2 inv{{{L[1][1] / det, -L[0][1] / det}, {-L[1][0] / det, L[0][0] / det}}};

    // F = Id + H, so L^-1 F L = Id + L^-1 H(L .).
    const BiPoly h1 = f1_ - BiPoly::z();
    const BiPoly h2 = f2_ - BiPoly::w();
    const BiPoly lz = L[0][0] * BiPoly::z() + L[0][1] * BiPoly::w();
    const BiPoly lw = L[1][0] * BiPoly::z() + L[1][1] * BiPoly::w();
    const BiPoly h1l = h1.compose(lz, lw, max_degree);
    const BiPoly h2l = h2.compose(lz, lw, max_degree);
    BiPoly g1 = BiPoly::z() + inv[0][0] * h1l + inv[0][1] * h2l;
    BiPoly g2 = BiPoly::w() + inv[1][0] * h1l + inv[1][1] * h2l;
    return validate(std::move(g1), std::move(g2));
}

Germ Germ::sheared(Complex c) const {
    if (c == Complex{}) return *this;
    return conjugated(Mat2{{{1.0, 0.0}, {c, 1.0}}});
}

ChartPolys chart_polys(const Germ& f, Chart chart) {
    const auto [pk, qk] = f.homogeneous_part(f.order());
    ChartPolys out;
    if (chart == Chart::U) {
        out.p = restrict_chart(pk, Chart::U);
        out.q = restrict_chart(qk, Chart::U);
    } else {
        out.p = restrict_chart(qk, Chart::V);
        out.q = restrict_chart(pk, Chart::V);
    }
    out.r = out.q - UniPoly{0.0, 1.0} * out.p;
    out.scale = std::max({out.p.max_abs_coeff(), out.q.max_abs_coeff(), out.r.max_abs_coeff()});
    return out;
}

Point BlowupExpansion::evaluate(Complex z, Complex u) const {
    Complex a = z, b = u;
    for (int j = 0; j <= depth; ++j) {
        a += ipow(z, k + j) * comp1[static_cast<std::size_t>(j)](u);
        b += ipow(z, k - 1 + j) * comp2[static_cast<std::size_t>(j)](u);
    }
    return {a, b};
}

BlowupExpansion blowup_expand(const Germ& f, Chart chart, int depth) {
    if (depth < 0) throw std::invalid_argument("blowup_expand: negative depth");
    if (chart == Chart::V) {
        BlowupExpansion e = blowup_expand(f.swapped(), Chart::U, depth);
        e.chart = Chart::V;
        return e;
    }
    const int k = f.order();
    const UniPoly u_mono{0.0, 1.0};
    // p_d(1,u) and r_d(u) = q_d(1,u) - u p_d(1,u) for d = k .. k + depth.
    std::vector<UniPoly> pd, rd;
    for (int d = k; d <= k + depth; ++d) {
        const auto [p, q] = f.homogeneous_part(d);
        const UniPoly pu = restrict_chart(p, Chart::U);
        pd.push_back(pu);
        rd.push_back(restrict_chart(q, Chart::U) - u_mono * pu);
    }

    // F~2 - u = z^(k-1) A(z) / (1 + B(z)), A_j = r_(k+j), B(z) = sum_{d>=k} z^(d-1) p_d(1,u).
    // inv = 1/(1+B) as a series in z up to z^depth.
    std::vector<UniPoly> inv(static_cast<std::size_t>(depth) + 1);
    inv[0] = UniPoly::constant(1.0);
    for (int j = 1; j <= depth; ++j) {
        UniPoly acc;
        for (int i = 1; i <= j; ++i) {
            const int d = i + 1;  // z^i carries p_(i+1)
            if (d < k) continue;
            acc = acc + pd[static_cast<std::size_t>(d - k)] * inv[static_cast<std::size_t>(j - i)];
        }
        inv[static_cast<std::size_t>(j)] = Complex(-1.0) * acc;
    }

    BlowupExpansion e;
    e.chart = Chart::U;
    e.k = k;
    e.depth = depth;
    e.comp1 = pd;
    for (int j = 0; j <= depth; ++j) {
        UniPoly acc;
        for (int i = 0; i <= j; ++i) acc = acc + rd[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(j - i)];
        e.comp2.push_back(acc);
    }
    return e;
}

Point blowup_map(const Germ& f, Chart chart, Complex z, Complex u) {
    if (chart == Chart::V) return blowup_map(f.swapped(), Chart::U, z, u);
    const Complex w = z * u;
    const Complex z1 = f.f1()(z, w);
    return {z1, f.f2()(z, w) / z1};
}

}  // namespace parabolic
