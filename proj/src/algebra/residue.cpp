#include "parabolic/residue.hpp"

#include <numbers>
#include <stdexcept>

#include "parabolic/trunc_series.hpp"

namespace parabolic {

Complex series_residue(const UniPoly& numer, const UniPoly& denom, Complex u0) {
    if (denom.is_negligible()) throw std::invalid_argument("series_residue: denominator vanishes identically");
    const UniPoly num = numer.shifted(u0);
    const UniPoly den = denom.shifted(u0);
    const double den_scale = den.max_abs_coeff();
    const int n = *den.vanishing_order(den_scale);
    if (n == 0) return {};
    const auto m = num.vanishing_order();
    if (!m || *m >= n) return {};

    // den = u^n s(u)
    TruncSeries s(n - 1);
    for (int i = 0; i < n; ++i) s[i] = den.coeff(n + i);
    const TruncSeries q = TruncSeries(num, n - 1) * s.inverse(den_scale);
    return q[n - 1];
}

Complex contour_residue(const std::function<Complex(Complex)>& f, Complex center, double radius, int nodes) {
    if (nodes <= 0 || !(radius > 0.0)) throw std::invalid_argument("contour_residue: bad contour");
    Complex acc{};
    for (int j = 0; j < nodes; ++j) {
        const Complex e = std::polar(1.0, 2.0 * std::numbers::pi * j / nodes);
        const Complex v = f(center + radius * e);
        if (!is_finite(v)) throw Error("contour_residue: evaluation failed on a node");
        acc += v * radius * e;
    }
    return acc / static_cast<double>(nodes);
}

}  // namespace parabolic
