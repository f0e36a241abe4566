#pragma once

#include <map>
#include <utility>
#include <vector>

#include "parabolic/types.hpp"
#include "parabolic/unipoly.hpp"

namespace parabolic {

/// Exponent pair (i, j) of the monomial z^i w^j.
using Exponent = std::pair<int, int>;

/// Sparse bivariate polynomial in (z, w). Coefficients that are exactly zero
/// are never stored, so the map doubles as the support.
class BiPoly {
public:
    BiPoly() = default;
    explicit BiPoly(std::map<Exponent, Complex> coeffs);

    static BiPoly z() { return monomial(1.0, 1, 0); }
    static BiPoly w() { return monomial(1.0, 0, 1); }
    static BiPoly constant(Complex c) { return monomial(c, 0, 0); }
    static BiPoly monomial(Complex c, int i, int j);

    const std::map<Exponent, Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int i, int j) const;
    bool is_zero() const { return coeffs_.empty(); }
    /// Largest i + j in the support, -1 for the zero polynomial.
    int degree() const;
    double max_abs_coeff() const;
    bool is_homogeneous() const;

    Complex operator()(Complex z, Complex w) const;

    /// Substitutes z -> a(z,w), w -> b(z,w). Terms of total degree above
    /// max_degree are dropped when max_degree >= 0.
    BiPoly compose(const BiPoly& a, const BiPoly& b, int max_degree = -1) const;
    /// Drops every monomial of total degree above d.
    BiPoly truncated(int d) const;
    /// Exchanges the roles of z and w.
    BiPoly swapped() const;
    /// Homogeneous component of degree d (possibly zero).
    BiPoly homogeneous_part(int d) const;

    BiPoly& operator+=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(Complex s, const BiPoly& a);
    friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

private:
    void add_term(Exponent e, Complex c);
    std::map<Exponent, Complex> coeffs_;
};

/// Splits P into its nonzero homogeneous parts, ascending by degree. The
/// parts sum back to P exactly.
std::vector<std::pair<int, BiPoly>> homogeneous_parts(const BiPoly& p);

/// Dehomogenises a homogeneous h: h(1,u) in chart U, h(u,1) in chart V.
/// Throws std::invalid_argument when h is not homogeneous.
UniPoly restrict_chart(const BiPoly& h, Chart chart);

}  // namespace parabolic
