#include "parabolic/roots.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace parabolic {
namespace {

constexpr int kMaxSweeps = 4000;
constexpr double kMergeCap = 1e-2;

// Weierstrass iteration on a monic polynomial of degree >= 1 (coefficients
// lowest first, leading 1 included).
std::vector<Complex> weierstrass(const std::vector<Complex>& monic) {
    const int d = static_cast<int>(monic.size()) - 1;
    double bound = 0.0;
    for (int i = 0; i < d; ++i)
        bound = std::max(bound, std::pow(std::abs(monic[static_cast<std::size_t>(i)]), 1.0 / (d - i)));
    const double radius = std::max(2.0 * bound, 1e-3);

    std::vector<Complex> z(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        z[static_cast<std::size_t>(j)] = std::polar(radius, 2.0 * std::numbers::pi * j / d + 0.4);

    auto eval = [&](Complex x) {
        Complex acc{};
        for (auto it = monic.rbegin(); it != monic.rend(); ++it) acc = acc * x + *it;
        return acc;
    };

    double best = std::numeric_limits<double>::infinity();
    int stall = 0;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double worst = 0.0;
        for (std::size_t j = 0; j < z.size(); ++j) {
            Complex den{1.0, 0.0};
            for (std::size_t l = 0; l < z.size(); ++l)
                if (l != j) den *= z[j] - z[l];
            if (den == Complex{}) den = Complex(1e-300, 0.0);
            const Complex delta = eval(z[j]) / den;
            if (is_finite(delta)) z[j] -= delta;
            worst = std::max(worst, std::abs(delta) / (1.0 + std::abs(z[j])));
        }
        if (worst < 1e-16) break;
        // Multiple roots converge linearly and eventually stall at the
        // rounding floor; stop once progress has stopped for a while.
        if (worst < best * 0.999) {
            best = worst;
            stall = 0;
        } else if (++stall > 200) {
            break;
        }
    }

    for (const auto& x : z) {
        double mag = 0.0;
        for (int i = 0; i <= d; ++i) mag += std::abs(monic[static_cast<std::size_t>(i)]) * std::pow(std::abs(x), i);
        if (!is_finite(x) || std::abs(eval(x)) > 1e-6 * mag)
            throw IllConditioned("roots_with_multiplicity: simultaneous iteration did not converge");
    }
    return z;
}

struct Cluster {
    Complex sum;
    int count = 0;
    Complex centroid() const { return sum / static_cast<double>(count); }
};

Complex polish(const UniPoly& p, Complex x, int mult) {
    UniPoly q = p;
    for (int i = 1; i < mult; ++i) q = q.derivative();
    const UniPoly dq = q.derivative();
    double resid = std::abs(q(x));
    for (int it = 0; it < 8 && resid > 0.0; ++it) {
        const Complex slope = dq(x);
        if (slope == Complex{}) break;
        const Complex next = x - q(x) / slope;
        const double r = std::abs(q(next));
        if (!(r < resid)) break;
        x = next;
        resid = r;
    }
    return x;
}

// The merged centroid of a rounding-split multiple root can sit far from the
// true root when the pieces are lopsided, so the test is made at the root of
// p^(order-1) nearest to the centroid.
bool vanishes_to_order(const UniPoly& p, Complex c, int order) {
    const Complex x = polish(p, c, order);
    if (std::abs(x - c) > kMergeCap * (1.0 + std::abs(c))) return false;
    const auto order_at = p.shifted(x).vanishing_order();
    return order_at.value_or(order) >= order;
}

}  // namespace

std::vector<Root> roots_with_multiplicity(const UniPoly& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("roots_with_multiplicity: zero polynomial");
    const double scale = p.max_abs_coeff();
    const auto low = p.vanishing_order(scale);
    if (!low) throw std::invalid_argument("roots_with_multiplicity: negligible polynomial");
    const int high = p.effective_degree(scale);

    std::vector<Root> out;
    if (*low > 0) out.push_back({Complex{}, *low});

    const int d = high - *low;
    if (d > 0) {
        const Complex lead = p.coeff(high);
        std::vector<Complex> monic(static_cast<std::size_t>(d) + 1);
        for (int i = 0; i <= d; ++i) monic[static_cast<std::size_t>(i)] = p.coeff(*low + i) / lead;
        const UniPoly core(monic);

        std::vector<Cluster> clusters;
        for (const auto& x : weierstrass(monic)) clusters.push_back({x, 1});

        // Grow clusters greedily: around each cluster, try merging it with its
        // nearest neighbours (largest accepted group wins). A rounding-split
        // multiple root only passes the vanishing test once all its pieces
        // are in the group, so pairs alone are not enough.
        for (bool merged = true; merged && clusters.size() > 1;) {
            merged = false;
            for (std::size_t i = 0; i < clusters.size() && !merged; ++i) {
                const Complex ci = clusters[i].centroid();
                std::vector<std::pair<double, std::size_t>> near;
                for (std::size_t j = 0; j < clusters.size(); ++j) {
                    if (j == i) continue;
                    const double dist = std::abs(ci - clusters[j].centroid());
                    if (dist <= kMergeCap * (1.0 + std::max(std::abs(ci), std::abs(clusters[j].centroid()))))
                        near.emplace_back(dist, j);
                }
                std::sort(near.begin(), near.end());
                std::size_t accept = 0;
                Cluster joined = clusters[i];
                for (std::size_t g = 0; g < near.size(); ++g) {
                    const Cluster& other = clusters[near[g].second];
                    joined = {joined.sum + other.sum, joined.count + other.count};
                    const double mag = 1.0 + std::abs(ci);
                    if (near[g].first <= tol * mag || vanishes_to_order(core, joined.centroid(), joined.count))
                        accept = g + 1;
                }
                if (accept == 0) continue;
                std::vector<std::size_t> drop;
                for (std::size_t g = 0; g < accept; ++g) {
                    const std::size_t j = near[g].second;
                    clusters[i] = {clusters[i].sum + clusters[j].sum, clusters[i].count + clusters[j].count};
                    drop.push_back(j);
                }
                std::sort(drop.rbegin(), drop.rend());
                for (std::size_t j : drop) clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
                merged = true;
            }
        }
        for (const auto& c : clusters) out.push_back({polish(core, c.centroid(), c.count), c.count});
    }

    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

}  // namespace parabolic
