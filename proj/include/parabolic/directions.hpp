#pragma once

#include <optional>
#include <string>
#include <vector>

#include "parabolic/germ.hpp"
#include "parabolic/types.hpp"

namespace parabolic {

class DirectionNotCharacteristic : public Error {
public:
    using Error::Error;
};

/// Raised where a direction-wise quantity is requested from a dicritical germ.
class Dicritical : public Error {
public:
    using Error::Error;
};

enum class DirectionClass { Fuchsian, Irregular, Apparent };

const char* to_string(DirectionClass c);

/// Order of vanishing that may be infinite (nullopt).
using VanishingOrder = std::optional<int>;

struct CharDirection {
    Chart chart = Chart::U;
    /// [1:u0] in chart U, [u0:1] in chart V.
    Complex u0;
    int multiplicity = 1;
    /// P_k(v) = lambda v for v = (1, u0) (chart U) or (u0, 1) (chart V).
    Complex lambda;
    bool degenerate = false;
    VanishingOrder m;
    int n = 1;
    DirectionClass cls = DirectionClass::Fuchsian;

    bool is_infinity() const { return chart == Chart::V && u0 == Complex{}; }
    /// Representative vector of the direction in C^2.
    Point vector() const { return chart == Chart::U ? Point{1.0, u0} : Point{u0, 1.0}; }
};

struct DirectionReport {
    int k = 0;
    bool dicritical = false;
    /// Sorted by chart (U first), then by (re, im) of u0.
    std::vector<CharDirection> directions;
};

/// Fuchsian iff 1+m = n, Irregular iff 1+m < n, Apparent iff 1+m > n or m = oo.
DirectionClass classify(VanishingOrder m, int n);

/// (m, n) at the direction u0 of the chart, after shifting it to 0.
/// Throws Dicritical or DirectionNotCharacteristic.
std::pair<VanishingOrder, int> vanishing_orders(const Germ& f, Chart chart, Complex u0);

/// Full description of the characteristic direction u0 in the chart; the
/// multiplicity is the order of vanishing n of r there.
/// Throws Dicritical or DirectionNotCharacteristic.
CharDirection analyze_direction(const Germ& f, Chart chart, Complex u0);

/// Every characteristic direction with multiplicity. A direction is reported
/// in the chart where its coordinate has modulus <= 1 ([0:1] is chart V at 0).
DirectionReport characteristic_directions(const Germ& f);

/// Chordal distance between the directions [a] and [b] of C^2, in [0, 1].
double projective_distance(const Point& a, const Point& b);

}  // namespace parabolic
