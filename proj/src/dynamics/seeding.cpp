#include "parabolic/dynamics/seeding.hpp"

#include <atomic>
#include <thread>

#include "parabolic/dynamics/coordinates.hpp"
#include "parabolic/indices.hpp"

namespace parabolic::dynamics {

std::vector<Point> basin_seeds(const Germ& f, const CharDirection& dir, int count, std::uint64_t seed,
                               const SeedOptions& opts) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    const int k = f.order();

    if (!dir.degenerate && dir.n == 1) {
        const Complex a0 = chart_polys(straightened(f, dir), Chart::U).p.coeff(0);
        for (int i = 0; i < count; ++i) {
            const Point xy = sample_V(opts.V, rng);
            const Complex z = std::pow(-1.0 / (a0 * double(k - 1) * xy[0]), 1.0 / (k - 1));
            out.push_back(chart_to_germ(dir, {z, 1.0 / xy[1]}));
        }
        return out;
    }
    if (dir.cls == DirectionClass::Irregular) {
        const IrregularTransform T(irregular_data(f, dir));
        for (int i = 0; i < count; ++i) out.push_back(chart_to_germ(dir, T.inverse(sample_V(opts.V, rng))));
        return out;
    }
    if (dir.cls == DirectionClass::Fuchsian && dir.degenerate) {
        const FuchsianData d = fuchsian_data(f, dir);
        const Complex s = double(d.a) * d.c_raw + double(d.b) * d.d_raw;
        const double R = opts.V.R, th = opts.lift_theta;
        for (int i = 0; i < count; ++i) {
            const double phi = th * (2.0 * unit(rng) - 1.0);
            const double r = (R / std::cos(th)) * (1.0 + unit(rng));
            const Complex X = 1.0 / std::polar(r, phi);
            const double sigma = opts.sigma_min + (opts.sigma_max - opts.sigma_min) * unit(rng);
            const double mod_u = sigma * std::pow(std::abs(X) / std::abs(s), 1.0 / (d.a + d.b));
            const Complex u = std::polar(mod_u, th * (2.0 * unit(rng) - 1.0));
            const Complex x = std::pow(-X / (s * ipow(u, d.b)), 1.0 / d.a);
            out.push_back(chart_to_germ(dir, inverse_a2({x, u}, d.m)));
        }
        return out;
    }
    throw WrongClass("basin_seeds: no basin construction for this direction");
}

ConcordanceReport concordance(const Germ& f, const CharDirection& dir, const std::vector<Point>& seeds,
                              const OrbitConfig& cfg, double match_tol, int threads) {
    const CompiledMap map(f);
    const std::vector<CharDirection> dirs = characteristic_directions(f).directions;

    ConcordanceReport rep;
    rep.samples = static_cast<int>(seeds.size());
    rep.results.resize(seeds.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < seeds.size(); i = next++) rep.results[i] = iterate_orbit(map, seeds[i], cfg);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (const auto& r : rep.results) {
        switch (r.fate) {
            case Fate::Escaped: ++rep.escaped; break;
            case Fate::Undecided: ++rep.undecided; break;
            case Fate::AttractedNoDirection: ++rep.attracted_other; break;
            case Fate::AttractedAlong: {
                const auto j = match_direction(*r.direction, dirs, match_tol);
                const bool predicted = j && dirs[*j].chart == dir.chart && std::abs(dirs[*j].u0 - dir.u0) < 1e-6;
                if (predicted)
                    ++rep.along_predicted;
                else
                    ++rep.attracted_other;
                break;
            }
        }
    }
    return rep;
}

}  // namespace parabolic::dynamics
