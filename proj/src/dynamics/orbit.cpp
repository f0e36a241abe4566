#include "parabolic/dynamics/orbit.hpp"

#include <algorithm>
#include <stdexcept>

namespace parabolic::dynamics {

void OrbitConfig::validate() const {
    if (max_iter < 0) throw std::invalid_argument("OrbitConfig: max_iter must be nonnegative");
    if (!(attract_radius > 0.0 && attract_radius < escape_radius))
        throw std::invalid_argument("OrbitConfig: need 0 < attract_radius < escape_radius");
    if (!(tangency_tol > 0.0)) throw std::invalid_argument("OrbitConfig: tangency_tol must be positive");
    if (direction_window < 1) throw std::invalid_argument("OrbitConfig: direction_window must be positive");
}

const char* to_string(Fate f) {
    switch (f) {
        case Fate::AttractedAlong: return "AttractedAlong";
        case Fate::AttractedNoDirection: return "AttractedNoDirection";
        case Fate::Escaped: return "Escaped";
        case Fate::Undecided: return "Undecided";
    }
    return "?";
}

CompiledMap::CompiledMap(const Germ& f) : degree_(f.degree()) {
    for (const auto& [e, c] : f.f1().coeffs()) t1_.push_back({c, e.first, e.second});
    for (const auto& [e, c] : f.f2().coeffs()) t2_.push_back({c, e.first, e.second});
}

Point CompiledMap::operator()(const Point& p) const {
    // Power tables up to the degree; small fixed-size buffers avoid
    // allocation in the inner loop for the usual low degrees.
    constexpr int kInline = 16;
    Complex zi[kInline + 1], wi[kInline + 1];
    std::vector<Complex> zv, wv;
    Complex* zp = zi;
    Complex* wp = wi;
    if (degree_ > kInline) {
        zv.resize(static_cast<std::size_t>(degree_) + 1);
        wv.resize(static_cast<std::size_t>(degree_) + 1);
        zp = zv.data();
        wp = wv.data();
    }
    zp[0] = wp[0] = 1.0;
    for (int d = 1; d <= degree_; ++d) {
        zp[d] = zp[d - 1] * p[0];
        wp[d] = wp[d - 1] * p[1];
    }
    Complex a{}, b{};
    for (const auto& t : t1_) a += t.c * zp[t.i] * wp[t.j];
    for (const auto& t : t2_) b += t.c * zp[t.i] * wp[t.j];
    return {a, b};
}

OrbitResult iterate_orbit(const CompiledMap& f, const Point& p0, const OrbitConfig& cfg) {
    cfg.validate();
    OrbitResult res;
    Point p = p0;
    double norm = norm2(p);
    auto unit = [](const Point& q, double nq) { return Point{q[0] / nq, q[1] / nq}; };
    auto finish = [&](Fate fate, long it) {
        res.fate = fate;
        res.iterations = it;
        res.final_point = p;
        if (norm > 0.0 && std::isfinite(norm)) res.direction = unit(p, norm);
        return res;
    };
    if (!std::isfinite(norm) || norm > cfg.escape_radius) return finish(Fate::Escaped, 0);
    if (norm == 0.0) throw std::invalid_argument("iterate_orbit: starting point is the fixed point");

    const auto window = static_cast<std::size_t>(cfg.direction_window);
    std::vector<Point> ring(window);
    std::size_t filled = 0, head = 0;
    long run = 0;  // consecutive decreasing iterates below attract_radius

    for (long it = 1; it <= cfg.max_iter; ++it) {
        p = f(p);
        const double next = norm2(p);
        if (!std::isfinite(next) || next > cfg.escape_radius) {
            norm = next;
            return finish(Fate::Escaped, it);
        }
        if (next == 0.0) {
            norm = 0.0;
            return finish(Fate::AttractedNoDirection, it);
        }
        run = (next < cfg.attract_radius && next < norm) ? run + 1 : 0;
        norm = next;
        const Point dir = unit(p, norm);
        if (run >= cfg.direction_window && filled == window) {
            const bool stable = std::all_of(ring.begin(), ring.end(), [&](const Point& q) {
                return projective_distance(q, dir) <= cfg.tangency_tol;
            });
            if (stable) return finish(Fate::AttractedAlong, it);
        }
        ring[head] = dir;
        head = (head + 1) % window;
        filled = std::min(filled + 1, window);
    }
    return finish(run >= cfg.direction_window ? Fate::AttractedNoDirection : Fate::Undecided, cfg.max_iter);
}

OrbitResult iterate_orbit(const Germ& f, const Point& p0, const OrbitConfig& cfg) {
    return iterate_orbit(CompiledMap(f), p0, cfg);
}

std::optional<std::size_t> match_direction(const Point& dir, const std::vector<CharDirection>& dirs, double tol) {
    std::optional<std::size_t> best;
    double best_d = tol;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        const double d = projective_distance(dir, dirs[i].vector());
        if (d <= best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

}  // namespace parabolic::dynamics
