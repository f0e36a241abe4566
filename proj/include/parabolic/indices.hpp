#pragma once

#include <optional>

#include "parabolic/directions.hpp"
#include "parabolic/germ.hpp"

namespace parabolic {

class DegenerateDirection : public Error {
public:
    using Error::Error;
};

/// A quantity was requested for a direction of the wrong class.
class WrongClass : public Error {
public:
    using Error::Error;
};

struct Regularity {
    /// Pure-z coefficient of the blown-up second component at order z^k,
    /// normalised so that the leading coefficient a_m of p_k(1,u) is 1.
    Complex rho;
    bool regular = false;
};

struct IndexReport {
    std::optional<Complex> hakim;
    Complex abate;
    Complex abate_contour;
    std::optional<Complex> rho;
    std::optional<bool> regular;
};

/// i_H = r'(u0) / p_k(1,u0) in the direction's chart. Throws
/// DegenerateDirection for degenerate directions.
Complex hakim_index(const Germ& f, const CharDirection& dir);

/// Res_{u0} p_k(1,u)/r(u) by Laurent expansion; exactly 0 for apparent
/// directions (including m = oo).
Complex abate_index(const Germ& f, const CharDirection& dir);

/// Independent trapezoidal contour evaluation of the same residue. The radius
/// is half the distance from u0 to the nearest other root of r (0.5 when
/// there is none).
Complex abate_index_contour(const Germ& f, const CharDirection& dir, int nodes = 64);

/// Regularity coefficient of a degenerate Fuchsian direction. Throws
/// WrongClass otherwise.
Regularity rho_regularity(const Germ& f, const CharDirection& dir);

/// Germ conjugated by a linear shear so that dir becomes [1:0] in chart U.
Germ straightened(const Germ& f, const CharDirection& dir);

IndexReport compute_indices(const Germ& f, const CharDirection& dir);

}  // namespace parabolic
