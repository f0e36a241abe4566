#pragma once

#include <functional>

#include "parabolic/types.hpp"
#include "parabolic/unipoly.hpp"

namespace parabolic {

/// Res_{u0} numer/denom by Laurent expansion: shift to u0, write
/// denom = u^n s(u) with s(0) != 0, invert s to order n-1 and read the
/// u^(n-1) coefficient of numer * s^-1. Returns exactly 0 when the quotient is
/// holomorphic at u0 (n == 0, numer identically zero, or numer vanishing to
/// order >= n).
///
/// Throws std::invalid_argument if denom is identically zero.
Complex series_residue(const UniPoly& numer, const UniPoly& denom, Complex u0);

/// (1 / 2 pi i) times the integral of f over |u - center| = radius, by the
/// trapezoidal rule on `nodes` equispaced points. Throws Error if f returns a
/// non-finite value on a node.
Complex contour_residue(const std::function<Complex(Complex)>& f, Complex center, double radius, int nodes = 64);

}  // namespace parabolic
