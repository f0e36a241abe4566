#include "parabolic/unipoly.hpp"

#include <algorithm>

namespace parabolic {

UniPoly::UniPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::monomial(Complex c, int degree) {
    std::vector<Complex> v(static_cast<std::size_t>(degree) + 1, Complex{});
    v.back() = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Complex UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
    return coeffs_[static_cast<std::size_t>(i)];
}

double UniPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Complex UniPoly::operator()(Complex u) const {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return UniPoly(std::move(d));
}

Complex UniPoly::derivative_at(Complex u, int j) const {
    UniPoly p = *this;
    for (int i = 0; i < j; ++i) p = p.derivative();
    return p(u);
}

UniPoly UniPoly::shifted(Complex c) const {
    // Repeated synthetic division (Horner form of the Taylor shift).
    std::vector<Complex> a = coeffs_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
    return UniPoly(std::move(a));
}

std::optional<int> UniPoly::vanishing_order(std::optional<double> scale) const {
    const double thr = zero_threshold(scale.value_or(max_abs_coeff()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (std::abs(coeffs_[i]) > thr) return static_cast<int>(i);
    return std::nullopt;
}

int UniPoly::effective_degree(std::optional<double> scale) const {
    const double thr = zero_threshold(scale.value_or(max_abs_coeff()));
    for (int i = degree(); i >= 0; --i)
        if (std::abs(coeffs_[static_cast<std::size_t>(i)]) > thr) return i;
    return -1;
}

bool UniPoly::is_negligible(std::optional<double> scale) const {
    return !vanishing_order(scale).has_value();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Complex> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + Complex(-1.0) * b; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Complex> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(r));
}

UniPoly operator*(Complex s, const UniPoly& a) {
    std::vector<Complex> r = a.coeffs_;
    for (auto& c : r) c *= s;
    return UniPoly(std::move(r));
}

}  // namespace parabolic
