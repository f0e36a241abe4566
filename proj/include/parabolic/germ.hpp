#pragma once

#include <array>
#include <vector>

#include "parabolic/bipoly.hpp"
#include "parabolic/types.hpp"
#include "parabolic/unipoly.hpp"

namespace parabolic {

enum class GermDefect { NotFixingOrigin, NotTangentToIdentity, IsIdentity };

const char* to_string(GermDefect d);

class GermValidationError : public Error {
public:
    GermValidationError(GermDefect defect, const std::string& what) : Error(what), defect_(defect) {}
    GermDefect defect() const { return defect_; }

private:
    GermDefect defect_;
};

/// 2x2 complex matrix, row-major, acting on column vectors (z, w).
using Mat2 = std::array<std::array<Complex, 2>, 2>;

/// Polynomial self-map F = (f1, f2) of C^2 with F(0) = 0, DF(0) = Id, F != Id.
/// Immutable once validated.
class Germ {
public:
    /// Throws GermValidationError naming the violated invariant.
    static Germ validate(BiPoly f1, BiPoly f2);

    const BiPoly& f1() const { return f1_; }
    const BiPoly& f2() const { return f2_; }

    /// Lowest degree >= 2 with a nonzero homogeneous part of F - Id.
    int order() const { return order_; }
    int degree() const;
    /// Degree-d part (p_d, q_d) of F - Id; zero for d < 2.
    std::pair<BiPoly, BiPoly> homogeneous_part(int d) const;

    Point operator()(const Point& p) const;

    /// swap o F o swap.
    Germ swapped() const;
    /// L^-1 o F o L, optionally truncated at total degree max_degree. The
    /// linear part stays exactly the identity.
    Germ conjugated(const Mat2& L, int max_degree = -1) const;
    /// S^-1 o F o S with S(z, w) = (z, w + c z): moves the direction [1:c]
    /// to [1:0].
    Germ sheared(Complex c) const;

    friend bool operator==(const Germ&, const Germ&) = default;

private:
    Germ(BiPoly f1, BiPoly f2, int order) : f1_(std::move(f1)), f2_(std::move(f2)), order_(order) {}
    BiPoly f1_, f2_;
    int order_ = 0;
};

/// p_k(1,u), q_k(1,u) and r(u) = q - u p in a blow-up chart. In chart V the
/// roles of the components are exchanged (the chart-V data of F is the
/// chart-U data of swap o F o swap).
struct ChartPolys {
    UniPoly p;
    UniPoly q;
    UniPoly r;
    /// Largest coefficient magnitude among p, q and r; scale of zero tests.
    double scale = 0.0;
};

ChartPolys chart_polys(const Germ& f, Chart chart);

/// Series expansion of the blown-up map in a chart:
///   F~1(z,u) - z = sum_j z^(k+j)   comp1[j](u),
///   F~2(z,u) - u = sum_j z^(k-1+j) comp2[j](u),  j = 0..depth.
struct BlowupExpansion {
    Chart chart = Chart::U;
    int k = 0;
    int depth = 0;
    std::vector<UniPoly> comp1;
    std::vector<UniPoly> comp2;

    /// Truncated (F~1, F~2) at (z, u).
    Point evaluate(Complex z, Complex u) const;
};

BlowupExpansion blowup_expand(const Germ& f, Chart chart, int depth);

/// Exact blown-up map in a chart: (f1(z, zu), f2(z, zu) / f1(z, zu)) in U.
Point blowup_map(const Germ& f, Chart chart, Complex z, Complex u);

}  // namespace parabolic
