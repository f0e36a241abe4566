#pragma once

#include <optional>
#include <span>
#include <vector>

#include "parabolic/types.hpp"

namespace parabolic {

/// Dense univariate polynomial with complex coefficients, lowest degree first.
/// The leading stored coefficient is exactly nonzero unless the polynomial is 0.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Complex> coeffs);
    UniPoly(std::initializer_list<Complex> coeffs);

    static UniPoly constant(Complex c) { return UniPoly({c}); }
    static UniPoly monomial(Complex c, int degree);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    /// Coefficient of u^i, zero beyond the degree.
    Complex coeff(int i) const;
    double max_abs_coeff() const;

    Complex operator()(Complex u) const;
    UniPoly derivative() const;
    /// j-th derivative evaluated at u.
    Complex derivative_at(Complex u, int j) const;
    /// Taylor shift: returns q with q(t) = p(t + c).
    UniPoly shifted(Complex c) const;

    /// Order of vanishing at u = 0 with coefficients at or below
    /// zero_threshold(scale) treated as zero; nullopt when every coefficient
    /// is below the threshold. scale defaults to max_abs_coeff().
    std::optional<int> vanishing_order(std::optional<double> scale = std::nullopt) const;
    /// Degree after dropping leading coefficients below zero_threshold(scale).
    int effective_degree(std::optional<double> scale = std::nullopt) const;
    bool is_negligible(std::optional<double> scale = std::nullopt) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(Complex s, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

private:
    void trim();
    std::vector<Complex> coeffs_;
};

}  // namespace parabolic
