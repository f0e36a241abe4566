#pragma once

// Hand-built germs shared by the unit and acceptance tests.

#include <initializer_list>
#include <random>

#include "parabolic/bipoly.hpp"
#include "parabolic/germ.hpp"

namespace fixtures {

using parabolic::BiPoly;
using parabolic::Complex;
using parabolic::Germ;

struct Term {
    Complex c;
    int i;
    int j;
};

inline BiPoly poly(std::initializer_list<Term> terms) {
    BiPoly p;
    for (const auto& t : terms) p += BiPoly::monomial(t.c, t.i, t.j);
    return p;
}

/// F = (z + sum f1_terms, w + sum f2_terms).
inline Germ germ(std::initializer_list<Term> h1, std::initializer_list<Term> h2) {
    return Germ::validate(BiPoly::z() + poly(h1), BiPoly::w() + poly(h2));
}

/// (z - z^2, w - w^2): three nondegenerate simple directions.
inline Germ hakim() { return germ({{-1, 2, 0}}, {{-1, 0, 2}}); }
/// (z + z^2, w + zw): dicritical.
inline Germ dicritical() { return germ({{1, 2, 0}}, {{1, 1, 1}}); }
/// (z + w^2, w + (z + w^2)^2): directions at the cube roots of unity.
inline Germ cube_roots() { return germ({{1, 0, 2}}, {{1, 2, 0}, {2, 1, 2}, {1, 0, 4}}); }
/// (z + z^2, w + zw + c w^2): irregular (m, n) = (0, 2) at [1:0].
inline Germ irregular(Complex c = 1.0) { return germ({{1, 2, 0}}, {{1, 1, 1}, {c, 0, 2}}); }
/// (z + zw, w + (4/3) w^2): degenerate Fuchsian (1, 2) at [1:0], Ind = 3.
inline Germ fuchsian_degenerate() { return germ({{1, 1, 1}}, {{4.0 / 3.0, 0, 2}}); }
/// (z + zw, w + (4/3) w^2 + alpha z^3): same, with rho = alpha.
inline Germ fuchsian_rho(Complex alpha) { return germ({{1, 1, 1}}, {{4.0 / 3.0, 0, 2}, {alpha, 3, 0}}); }
/// (z + zw, w + 2zw): apparent (1, 1) at [1:0].
inline Germ apparent() { return germ({{1, 1, 1}}, {{2, 1, 1}}); }
/// (z - z^2, w - zw - w^2): irregular (0, 2) at [1:0] with a_0 = c_2 = -1.
inline Germ irregular_b1() { return germ({{-1, 2, 0}}, {{-1, 1, 1}, {-1, 0, 2}}); }
/// (z - zw + w^2, w - w^2): irregular (1, 3) at [1:0], p_2(1,u) = -u + u^2, r = -u^3.
inline Germ irregular_b2() { return germ({{-1, 1, 1}, {1, 0, 2}}, {{-1, 0, 2}}); }

inline Complex random_complex(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const double re = U(rng);
    const double im = U(rng);
    return {scale * re, scale * im};
}

/// Random germ of order k with dense degree-k part and a sprinkling of
/// degree-(k+1) terms.
inline Germ random_germ(std::mt19937_64& rng, int k) {
    BiPoly h1, h2;
    for (int i = 0; i <= k; ++i) {
        h1 += BiPoly::monomial(random_complex(rng), i, k - i);
        h2 += BiPoly::monomial(random_complex(rng), i, k - i);
    }
    h1 += BiPoly::monomial(random_complex(rng), k + 1, 0);
    h2 += BiPoly::monomial(random_complex(rng), 0, k + 1);
    return Germ::validate(BiPoly::z() + h1, BiPoly::w() + h2);
}

/// Random germ of order k whose direction [1:0] is apparent with (m, n) = (1, 1):
/// P_k = (w A, w B) with random A, B of degree k-1, so p(u) = u A(1,u) and
/// r(u) = u (B(1,u) - u A(1,u)).
inline Germ random_apparent_germ(std::mt19937_64& rng, int k) {
    BiPoly a, b;
    for (int i = 0; i <= k - 1; ++i) {
        a += BiPoly::monomial(random_complex(rng), i, k - 1 - i);
        b += BiPoly::monomial(random_complex(rng), i, k - 1 - i);
    }
    a += BiPoly::monomial(2.0, k - 1, 0);
    b += BiPoly::monomial(2.0, k - 1, 0);
    BiPoly h1 = BiPoly::w() * a + BiPoly::monomial(random_complex(rng), k + 1, 0);
    BiPoly h2 = BiPoly::w() * b + BiPoly::monomial(random_complex(rng), 0, k + 1);
    return Germ::validate(BiPoly::z() + h1, BiPoly::w() + h2);
}

/// Random invertible matrix with entries in the unit square and determinant
/// bounded away from zero.
inline parabolic::Mat2 random_linear(std::mt19937_64& rng) {
    for (;;) {
        parabolic::Mat2 L{{{random_complex(rng), random_complex(rng)}, {random_complex(rng), random_complex(rng)}}};
        if (std::abs(L[0][0] * L[1][1] - L[0][1] * L[1][0]) > 0.3) return L;
    }
}

}  // namespace fixtures
