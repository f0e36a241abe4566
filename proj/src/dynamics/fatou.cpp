#include "parabolic/dynamics/fatou.hpp"

#include <algorithm>

namespace parabolic::dynamics {

namespace {
constexpr double kAsymptoticRadius = 20.0;
}

Complex digamma_asymptotic(Complex x) {
    const Complex inv = 1.0 / x;
    const Complex inv2 = inv * inv;
    return std::log(x) - 0.5 * inv - inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 / 252.0));
}

FatouResult fatou_coordinate(const PlaneMap& G, const Point& p0, double tol, long max_iter) {
    if (!(p0[0].real() > 0.0)) throw FatouError("fatou_coordinate: start outside Re x > 0 (log branch)");
    Point p = p0;
    long n = 0;
    auto step = [&] {
        p = G(p);
        ++n;
        if (!is_finite(p[0]) || !is_finite(p[1])) throw FatouError("fatou_coordinate: orbit is not finite");
        if (!(p[0].real() > 0.0)) throw FatouError("fatou_coordinate: orbit left Re x > 0");
    };
    while (std::abs(p[0]) < kAsymptoticRadius) {
        if (n >= max_iter) throw FatouError("fatou_coordinate: max_iter reached before the asymptotic regime");
        step();
    }
    auto estimate = [&] { return Point{p[0] - double(n), p[1] - digamma_asymptotic(p[0])}; };
    Point prev = estimate();
    long checkpoint = std::max<long>(n, 1);
    for (;;) {
        const long target = n + checkpoint;
        if (target > max_iter) throw FatouError("fatou_coordinate: no convergence within max_iter");
        while (n < target) step();
        const Point cur = estimate();
        if (std::abs(cur[0] - prev[0]) < tol && std::abs(cur[1] - prev[1]) < tol)
            return {cur[0], cur[1], true, n};
        prev = cur;
        checkpoint *= 2;
    }
}

PhiGlobalResult phi_global(const PlaneMap& F, const std::function<bool(const Point&)>& in_region,
                           const std::function<Point(const Point&)>& phi, const Point& p, long n_max) {
    Point q = p;
    long n = 0;
    while (!in_region(q)) {
        if (n >= n_max) throw NotInBasin("phi_global: orbit did not enter the chart region");
        q = F(q);
        ++n;
        if (!is_finite(q[0]) || !is_finite(q[1])) throw NotInBasin("phi_global: orbit diverged");
    }
    const Point a = phi(q);
    const Point b = phi(F(q));
    PhiGlobalResult res;
    res.n = n;
    res.value = {a[0] - double(n), a[1]};
    const Point alt{b[0] - double(n + 1), b[1]};
    res.consistency = std::max(std::abs(alt[0] - res.value[0]), std::abs(alt[1] - res.value[1]));
    return res;
}

}  // namespace parabolic::dynamics
