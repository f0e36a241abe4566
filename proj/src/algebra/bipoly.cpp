#include "parabolic/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace parabolic {

BiPoly::BiPoly(std::map<Exponent, Complex> coeffs) {
    for (const auto& [e, c] : coeffs) add_term(e, c);
}

BiPoly BiPoly::monomial(Complex c, int i, int j) {
    if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
    BiPoly p;
    p.add_term({i, j}, c);
    return p;
}

void BiPoly::add_term(Exponent e, Complex c) {
    if (e.first < 0 || e.second < 0) throw std::invalid_argument("BiPoly: negative exponent");
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        if (c != Complex{}) coeffs_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == Complex{}) coeffs_.erase(it);
}

Complex BiPoly::coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? Complex{} : it->second;
}

int BiPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : coeffs_) d = std::max(d, e.first + e.second);
    return d;
}

double BiPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool BiPoly::is_homogeneous() const {
    if (coeffs_.empty()) return true;
    const int d = coeffs_.begin()->first.first + coeffs_.begin()->first.second;
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [d](const auto& t) { return t.first.first + t.first.second == d; });
}

Complex BiPoly::operator()(Complex z, Complex w) const {
    Complex acc{};
    for (const auto& [e, c] : coeffs_) acc += c * ipow(z, e.first) * ipow(w, e.second);
    return acc;
}

namespace {

// Powers base^0 .. base^n, each truncated at max_degree.
std::vector<BiPoly> power_table(const BiPoly& base, int n, int max_degree) {
    std::vector<BiPoly> pw;
    pw.reserve(static_cast<std::size_t>(n) + 1);
    pw.push_back(BiPoly::constant(1.0));
    for (int i = 1; i <= n; ++i) {
        BiPoly next = pw.back() * base;
        pw.push_back(max_degree >= 0 ? next.truncated(max_degree) : std::move(next));
    }
    return pw;
}

}  // namespace

BiPoly BiPoly::compose(const BiPoly& a, const BiPoly& b, int max_degree) const {
    int max_i = 0, max_j = 0;
    for (const auto& [e, c] : coeffs_) {
        max_i = std::max(max_i, e.first);
        max_j = std::max(max_j, e.second);
    }
    const auto pa = power_table(a, max_i, max_degree);
    const auto pb = power_table(b, max_j, max_degree);
    BiPoly out;
    for (const auto& [e, c] : coeffs_) {
        BiPoly term = c * (pa[static_cast<std::size_t>(e.first)] * pb[static_cast<std::size_t>(e.second)]);
        out += max_degree >= 0 ? term.truncated(max_degree) : term;
    }
    return out;
}

BiPoly BiPoly::truncated(int d) const {
    BiPoly out;
    for (const auto& [e, c] : coeffs_)
        if (e.first + e.second <= d) out.coeffs_.emplace(e, c);
    return out;
}

BiPoly BiPoly::swapped() const {
    BiPoly out;
    for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(Exponent{e.second, e.first}, c);
    return out;
}

BiPoly BiPoly::homogeneous_part(int d) const {
    BiPoly out;
    for (const auto& [e, c] : coeffs_)
        if (e.first + e.second == d) out.coeffs_.emplace(e, c);
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + Complex(-1.0) * b; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
}

BiPoly operator*(Complex s, const BiPoly& a) {
    BiPoly out;
    for (const auto& [e, c] : a.coeffs_) out.add_term(e, s * c);
    return out;
}

std::vector<std::pair<int, BiPoly>> homogeneous_parts(const BiPoly& p) {
    std::map<int, BiPoly> by_degree;
    for (const auto& [e, c] : p.coeffs()) by_degree[e.first + e.second] += BiPoly::monomial(c, e.first, e.second);
    return {by_degree.begin(), by_degree.end()};
}

UniPoly restrict_chart(const BiPoly& h, Chart chart) {
    if (!h.is_homogeneous()) throw std::invalid_argument("restrict_chart: polynomial is not homogeneous");
    const int d = std::max(h.degree(), 0);
    std::vector<Complex> out(static_cast<std::size_t>(d) + 1);
    for (const auto& [e, c] : h.coeffs()) out[static_cast<std::size_t>(chart == Chart::U ? e.second : e.first)] += c;
    return UniPoly(std::move(out));
}

}  // namespace parabolic
