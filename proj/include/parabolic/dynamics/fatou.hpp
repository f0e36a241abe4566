#pragma once

#include <functional>

#include "parabolic/dynamics/normal_form.hpp"
#include "parabolic/types.hpp"

namespace parabolic::dynamics {

class FatouError : public Error {
public:
    using Error::Error;
};

class NotInBasin : public Error {
public:
    using Error::Error;
};

struct FatouResult {
    Complex phi1;
    Complex phi2;
    bool converged = false;
    long iterations = 0;
};

/// Fatou coordinate of a map in the normal form x1 = x + 1 + o(1/x),
/// y1 = y + 1/x + o(1/x):
///   Phi1 = lim (x_n - n),   Phi2 = lim (y_n - log x_n)  (principal log).
/// The second limit is accelerated by evaluating y_n - psi(x_n) with the
/// asymptotic digamma series once |x_n| >= 20 (for the exact model this is
/// exactly constant along orbits). Estimates are compared at doubling
/// checkpoints until successive ones differ by less than tol.
///
/// Throws FatouError if Re x0 <= 0, the orbit produces non-finite values or
/// leaves Re x > 0, or max_iter is reached before convergence.
FatouResult fatou_coordinate(const PlaneMap& G, const Point& p0, double tol = 1e-12, long max_iter = 1000000);

/// Asymptotic digamma series ln x - 1/(2x) - 1/(12x^2) + 1/(120x^4) - 1/(252x^6);
/// accurate to ~1e-13 for |x| >= 20 with |Arg x| < pi/2.
Complex digamma_asymptotic(Complex x);

struct PhiGlobalResult {
    Point value;
    /// Number of iterates needed to enter the region.
    long n = 0;
    /// |value computed at n+1 - value at n|.
    double consistency = 0.0;
};

/// Phi(p) = phi(F^n(p)) - (n, 0) for the least n <= n_max with F^n(p) in
/// the region; the value is recomputed from n+1 as a well-definedness check.
/// Throws NotInBasin if the orbit does not enter the region by n_max.
PhiGlobalResult phi_global(const PlaneMap& F, const std::function<bool(const Point&)>& in_region,
                           const std::function<Point(const Point&)>& phi, const Point& p, long n_max);

}  // namespace parabolic::dynamics
