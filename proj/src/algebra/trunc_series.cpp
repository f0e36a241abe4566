#include "parabolic/trunc_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace parabolic {

TruncSeries::TruncSeries(int order) {
    if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

TruncSeries::TruncSeries(const UniPoly& p, int order) : TruncSeries(order) {
    for (int i = 0; i <= order; ++i) (*this)[i] = p.coeff(i);
}

TruncSeries TruncSeries::inverse(double scale) const {
    const Complex c0 = coeffs_.front();
    if (std::abs(c0) <= zero_threshold(scale)) throw IllConditioned("TruncSeries::inverse: constant term vanishes");
    TruncSeries inv(order());
    inv[0] = 1.0 / c0;
    for (int j = 1; j <= order(); ++j) {
        Complex acc{};
        for (int i = 1; i <= j; ++i) acc += (*this)[i] * inv[j - i];
        inv[j] = -acc / c0;
    }
    return inv;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int n = std::min(a.order(), b.order());
    TruncSeries r(n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace parabolic
