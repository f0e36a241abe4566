#pragma once

#include "parabolic/directions.hpp"
#include "parabolic/germ.hpp"
#include "parabolic/types.hpp"

namespace parabolic::dynamics {

/// Leading data of an irregular direction after it has been moved to [1:0]
/// of chart U: F~1 = z + z^k [a_m u^m + ...], F~2 = u + z^(k-1) [c_n u^n + ...].
struct IrregularData {
    int k = 2;
    int m = 0;
    int n = 2;
    Complex a_m;
    Complex c_n;
};

/// Throws WrongClass unless dir is irregular.
IrregularData irregular_data(const Germ& f, const CharDirection& dir);

/// Coordinates in which the blown-up map at an irregular direction is close
/// to (x, y) -> (x + 1, y + 1/x):
///   x = -1 / ((k-1) a_m z^(k-1) u^m),
///   y = (k-1) a_m / ((n-m-1) c_n u^(n-m-1)).
/// With a_m = c_n = -1 these are the displayed changes of variables of the
/// two irregular cases (m = 0 and m > 0). The inverse uses principal powers
/// and is continuous on Re x > 0, Re y > 0.
class IrregularTransform {
public:
    explicit IrregularTransform(const IrregularData& data);

    const IrregularData& data() const { return data_; }

    /// (z, u) -> (x, y). Throws Error when z == 0 or u == 0.
    Point forward(const Point& zu) const;
    /// (x, y) -> (z, u). Throws Error unless Re x > 0 and Re y > 0.
    Point inverse(const Point& xy) const;

private:
    IrregularData data_;
    int p_;     // n - m - 1
    Complex C_;  // (k-1) a_m / (p c_n)
    Complex D_;  // -1 / ((k-1) a_m)
};

/// Case m = 0 (throws WrongClass for other directions).
Point transform_b1(const Germ& f, const CharDirection& dir, const Point& zu);
Point inverse_b1(const Germ& f, const CharDirection& dir, const Point& xy);
/// Case m > 0 (throws WrongClass for other directions).
Point transform_b2(const Germ& f, const CharDirection& dir, const Point& zu);
Point inverse_b2(const Germ& f, const CharDirection& dir, const Point& xy);

/// Leading data of a degenerate Fuchsian direction moved to [1:0] of chart U,
/// and the Lemma-1 quantities of the (x, u) = (z / u^(m+1), u) chart:
///   x1 = x + x^k u^(mk+k-1) [c_raw + ...],  u1 = u + x^(k-1) u^(mk+k) [d_raw + ...]
/// with c_raw = a_m (1 - (m+1) beta), d_raw = a_m beta, beta = 1/Ind.
struct FuchsianData {
    int k = 2;
    int m = 1;
    Complex a_m;
    Complex c_n;
    Complex beta;
    /// Lemma-1 exponents a = k-1, b = mk+k-1 and normalised coefficients
    /// c = 1 - (m+1) beta, d = beta.
    int a = 1;
    int b = 1;
    Complex c;
    Complex d;
    Complex c_raw;
    Complex d_raw;
};

/// Throws WrongClass unless dir is degenerate Fuchsian.
FuchsianData fuchsian_data(const Germ& f, const CharDirection& dir);

/// (z, u) -> (z / u^(m+1), u). Throws Error when u == 0.
Point transform_a2(const Point& zu, int m);
Point inverse_a2(const Point& xu, int m);

/// Maps a point of the straightened blow-up chart of dir back to the
/// original coordinates of F: (z, u) -> the point whose direction is close
/// to dir when u is small.
Point chart_to_germ(const CharDirection& dir, const Point& zu);

}  // namespace parabolic::dynamics
