#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace parabolic {

using Complex = std::complex<double>;

/// A point of C^2, stored as (z, w).
using Point = std::array<Complex, 2>;

/// Relative factor of the scale-aware zero test.
inline constexpr double kZeroRelTol = 1e-10;

/// Threshold below which a coefficient is treated as zero, given the
/// largest coefficient magnitude that participated in producing it.
inline double zero_threshold(double scale) { return kZeroRelTol * (1.0 + scale); }

inline bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

/// Integer power by repeated squaring; ipow(c, 0) == 1 for every c.
inline Complex ipow(Complex c, int e) {
    Complex r{1.0, 0.0};
    if (e < 0) {
        c = 1.0 / c;
        e = -e;
    }
    while (e > 0) {
        if (e & 1) r *= c;
        c *= c;
        e >>= 1;
    }
    return r;
}

inline double norm2(const Point& p) { return std::sqrt(std::norm(p[0]) + std::norm(p[1])); }

/// Blow-up chart: U is (z, u = w/z), V is (w, v = z/w).
enum class Chart { U, V };

inline const char* to_string(Chart c) { return c == Chart::U ? "U" : "V"; }

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's numerical comfort zone (vanishing pivots,
/// root finder stalls, and similar).
class IllConditioned : public Error {
public:
    using Error::Error;
};

}  // namespace parabolic
