#include "parabolic/dynamics/coordinates.hpp"

#include "parabolic/indices.hpp"

namespace parabolic::dynamics {

IrregularData irregular_data(const Germ& f, const CharDirection& dir) {
    if (dir.cls != DirectionClass::Irregular || !dir.m)
        throw WrongClass("irregular coordinates need an irregular direction");
    const ChartPolys cp = chart_polys(straightened(f, dir), Chart::U);
    return {f.order(), *dir.m, dir.n, cp.p.coeff(*dir.m), cp.r.coeff(dir.n)};
}

IrregularTransform::IrregularTransform(const IrregularData& data)
    : data_(data),
      p_(data.n - data.m - 1),
      C_(double(data.k - 1) * data.a_m / (double(data.n - data.m - 1) * data.c_n)),
      D_(-1.0 / (double(data.k - 1) * data.a_m)) {
    if (data.k < 2 || data.m < 0 || p_ < 1 || data.a_m == Complex{} || data.c_n == Complex{})
        throw std::invalid_argument("IrregularTransform: data is not of irregular type");
}

Point IrregularTransform::forward(const Point& zu) const {
    const auto [z, u] = zu;
    if (z == Complex{} || u == Complex{}) throw Error("irregular transform: point on a coordinate axis");
    const int k = data_.k;
    const Complex x = D_ / (ipow(z, k - 1) * ipow(u, data_.m));
    const Complex y = C_ / ipow(u, p_);
    return {x, y};
}

Point IrregularTransform::inverse(const Point& xy) const {
    const auto [x, y] = xy;
    if (!(x.real() > 0.0 && y.real() > 0.0)) throw Error("irregular transform: point off the branch sector");
    const double km1 = data_.k - 1;
    const double p = p_;
    const Complex u = std::pow(C_, 1.0 / p) * std::pow(y, -1.0 / p);
    Complex z = std::pow(D_, 1.0 / km1) * std::pow(x, -1.0 / km1);
    if (data_.m > 0) {
        const double e = data_.m / (p * km1);
        z *= std::pow(C_, -e) * std::pow(y, e);
    }
    return {z, u};
}

namespace {

IrregularTransform checked(const Germ& f, const CharDirection& dir, bool want_m_zero) {
    const IrregularData d = irregular_data(f, dir);
    if ((d.m == 0) != want_m_zero)
        throw WrongClass(want_m_zero ? "transform_b1 needs m = 0" : "transform_b2 needs m > 0");
    return IrregularTransform(d);
}

}  // namespace

Point transform_b1(const Germ& f, const CharDirection& dir, const Point& zu) {
    return checked(f, dir, true).forward(zu);
}
Point inverse_b1(const Germ& f, const CharDirection& dir, const Point& xy) {
    return checked(f, dir, true).inverse(xy);
}
Point transform_b2(const Germ& f, const CharDirection& dir, const Point& zu) {
    return checked(f, dir, false).forward(zu);
}
Point inverse_b2(const Germ& f, const CharDirection& dir, const Point& xy) {
    return checked(f, dir, false).inverse(xy);
}

FuchsianData fuchsian_data(const Germ& f, const CharDirection& dir) {
    if (!dir.degenerate || dir.cls != DirectionClass::Fuchsian || !dir.m)
        throw WrongClass("case (a.2) coordinates need a degenerate Fuchsian direction");
    const ChartPolys cp = chart_polys(straightened(f, dir), Chart::U);
    FuchsianData d;
    d.k = f.order();
    d.m = *dir.m;
    d.a_m = cp.p.coeff(d.m);
    d.c_n = cp.r.coeff(d.m + 1);
    d.beta = d.c_n / d.a_m;
    d.a = d.k - 1;
    d.b = d.m * d.k + d.k - 1;
    d.c = 1.0 - double(d.m + 1) * d.beta;
    d.d = d.beta;
    d.c_raw = d.a_m * d.c;
    d.d_raw = d.a_m * d.d;
    return d;
}

Point transform_a2(const Point& zu, int m) {
    if (zu[1] == Complex{}) throw Error("transform_a2: u must be nonzero");
    return {zu[0] / ipow(zu[1], m + 1), zu[1]};
}

Point inverse_a2(const Point& xu, int m) { return {xu[0] * ipow(xu[1], m + 1), xu[1]}; }

Point chart_to_germ(const CharDirection& dir, const Point& zu) {
    const auto [z, u] = zu;
    const Complex w = z * (u + dir.u0);
    return dir.chart == Chart::U ? Point{z, w} : Point{w, z};
}

}  // namespace parabolic::dynamics
