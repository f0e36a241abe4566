#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>

#include "parabolic/directions.hpp"
#include "parabolic/germ.hpp"
#include "parabolic/types.hpp"

namespace parabolic::dynamics {

using PlaneMap = std::function<Point(const Point&)>;

/// V_{R,N,theta} = { Re x > R, |Arg x| < theta, Re y > R, |y|^N < |x| }.
struct SectorRegion {
    double R = 50.0;
    double N = 2.0;
    double theta = std::numbers::pi / 8.0;

    /// Throws std::invalid_argument unless R > 0, N > 1, 0 < theta < pi/4.
    void validate() const;
    bool contains(const Point& xy) const;
    /// Smallest of the four normalised membership margins; positive inside.
    double margin(const Point& xy) const;
};

bool region_V_contains(const Point& xy, const SectorRegion& V);

/// Draws a point of V from the bounded patch Re y in (R, 2R),
/// |Im y| < R, |x| in (|y|^N, 4 |y|^N), |Arg x| < theta (rejection sampled).
Point sample_V(const SectorRegion& V, std::mt19937_64& rng);

/// Declared decay exponents of the error terms
///   eta1 = x1 - x - 1       = O(|x|^-a + |y|^-b),
///   eta2 = y1 - y - 1/x     = O(|y|^c / |x|^d + 1 / (|x| |y|^e)).
struct Exponents {
    double a = 1.0;
    double b = 1.0;
    double c = 1.0;
    double d = 2.0;
    double e = 1.0;
};

struct NormalFormMap {
    PlaneMap map;
    Exponents exponents;
};

/// The exact model (x, y) -> (x + 1, y + 1/x).
NormalFormMap model_map();

/// The blown-up map at an irregular direction, conjugated by
/// IrregularTransform. For m = 0 the exponents are the displayed ones
/// a = 1/(k-1), b = c = 1/(n-1), d = k/(k-1), e = n/(n-1). For m > 0 the
/// displayed remainders carry positive powers of y; they are folded into
/// the declared form using |y|^N < |x|, which gives a = 1/(k-1) - s/N with
/// s = (km+k-1)/((k-1)(n-m-1)). Throws std::invalid_argument when that a is
/// not positive for the given N.
NormalFormMap irregular_normal_form(const Germ& f, const CharDirection& dir, double N);

struct ResidualFit {
    /// max |eta1| / (|x|^-a + |y|^-b) over the samples.
    double C1 = 0.0;
    /// max |eta2| / (|y|^c/|x|^d + 1/(|x||y|^e)) over the samples.
    double C2 = 0.0;
    int samples = 0;
};

ResidualFit fit_residuals(const NormalFormMap& G, const SectorRegion& V, int samples, std::uint64_t seed);

class HypothesisViolation : public Error {
public:
    using Error::Error;
};

struct InvarianceReport {
    int samples = 0;
    int violations = 0;
    /// Smallest normalised margin of G(p) over the samples (negative means
    /// some image left V).
    double worst_margin = 0.0;
    /// max |eta1| and max |x| |eta2| over the samples.
    double max_eta1 = 0.0;
    double max_x_eta2 = 0.0;
    /// |eta1| < 1/10 and |eta2| < 1/(10 |x|) on every sample.
    bool hypothesis_ok = true;
};

/// Applies G once to `samples` points drawn from V and counts images that
/// leave V. With require_hypothesis the normal-form bounds are checked first
/// and HypothesisViolation is thrown if they fail on the patch.
InvarianceReport check_V_invariance(const NormalFormMap& G, const SectorRegion& V, int samples, std::uint64_t seed,
                                    bool require_hypothesis = true);

using Point3 = std::array<Complex, 3>;

/// The C^3 lift of a map f(z, w) = (z (1 + c z^a w^b + ...), w (1 + d z^a w^b + ...)):
/// pi(z, w) = (-s z^a w^b, z, w) with s = ac + bd, and
/// g(x, z, w) = (x (f1/z)^a (f2/w)^b, f1, f2), so that pi o f = g o pi.
struct Lemma1Lift {
    Complex c, d;
    int a = 1, b = 0;
    Complex s;
    /// Diagonal linear part diag(c/s, d/s).
    std::array<Complex, 2> A;
    PlaneMap f;

    Point3 pi(const Point& zw) const;
    Point3 g(const Point3& xzw) const;
};

/// Throws std::invalid_argument when ac + bd == 0 or a < 1 or b < 0.
Lemma1Lift lemma1_lift(Complex c, Complex d, int a, int b, PlaneMap f);

struct LiftCheck {
    int samples = 0;
    /// max |pi(f(p)) - g(pi(p))| / (1 + |pi(f(p))|).
    double max_commutation = 0.0;
    /// max |X1 - (X - X^2)| / |X|^2 with X = pi_1(p): the lifted first
    /// coordinate is X - X^2 up to terms that vanish with the point.
    double max_hakim_defect = 0.0;
};

/// Samples points with |z|, |w| in (radius/2, radius) and positive real
/// lifted coordinate.
LiftCheck verify_lift(const Lemma1Lift& lift, int samples, std::uint64_t seed, double radius);

/// The blown-up map at a degenerate Fuchsian direction in the coordinates
/// (x, u) = (z / u^(m+1), u).
PlaneMap fuchsian_a2_map(const Germ& f, const CharDirection& dir);

}  // namespace parabolic::dynamics
