#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "parabolic/analysis.hpp"

using namespace parabolic;

namespace {

const CharDirection& at(const DirectionReport& rep, Chart chart, Complex u0) {
    for (const auto& d : rep.directions)
        if (d.chart == chart && std::abs(d.u0 - u0) < 1e-8) return d;
    FAIL("direction not found");
    return rep.directions.front();
}

int multiplicity_sum(const DirectionReport& rep) {
    int s = 0;
    for (const auto& d : rep.directions) s += d.multiplicity;
    return s;
}

}  // namespace

// ---------------------------------------------------------------- directions

TEST_CASE("characteristic directions of (z - z^2, w - w^2)") {
    const auto rep = characteristic_directions(fixtures::hakim());
    CHECK(!rep.dicritical);
    REQUIRE(rep.directions.size() == 3);
    for (const auto& [chart, u0] : {std::pair{Chart::U, Complex(0)}, {Chart::U, Complex(1)}, {Chart::V, Complex(0)}}) {
        const auto& d = at(rep, chart, u0);
        CHECK(d.multiplicity == 1);
        CHECK(!d.degenerate);
        CHECK(std::abs(d.lambda - Complex(-1.0)) < 1e-14);
        CHECK(d.cls == DirectionClass::Fuchsian);
    }
    CHECK(rep.directions.back().is_infinity());
}

TEST_CASE("dicritical germ") {
    const auto rep = characteristic_directions(fixtures::dicritical());
    CHECK(rep.dicritical);
    CHECK(rep.directions.empty());
    CHECK_THROWS_AS(vanishing_orders(fixtures::dicritical(), Chart::U, 0.0), Dicritical);
}

TEST_CASE("cube roots of unity") {
    const auto rep = characteristic_directions(fixtures::cube_roots());
    REQUIRE(rep.directions.size() == 3);
    for (int j = 0; j < 3; ++j) {
        const auto& d = at(rep, Chart::U, std::polar(1.0, 2.0 * std::numbers::pi * j / 3.0));
        CHECK(d.multiplicity == 1);
        CHECK(!d.degenerate);
    }
    for (const auto& d : rep.directions) CHECK(!d.is_infinity());
}

TEST_CASE("vanishing orders and classes") {
    CHECK(vanishing_orders(fixtures::fuchsian_degenerate(), Chart::U, 0.0) == std::pair<VanishingOrder, int>{1, 2});
    CHECK(vanishing_orders(fixtures::irregular(0.7), Chart::U, 0.0) == std::pair<VanishingOrder, int>{0, 2});
    CHECK(vanishing_orders(fixtures::apparent(), Chart::U, 0.0) == std::pair<VanishingOrder, int>{1, 1});
    CHECK_THROWS_AS(vanishing_orders(fixtures::hakim(), Chart::U, 0.5), DirectionNotCharacteristic);

    CHECK(classify(0, 1) == DirectionClass::Fuchsian);
    CHECK(classify(1, 3) == DirectionClass::Irregular);
    CHECK(classify(2, 1) == DirectionClass::Apparent);
    CHECK(classify(std::nullopt, 4) == DirectionClass::Apparent);
}

TEST_CASE("m = infinity when p_k vanishes on the chart") {
    // p_2 = 0, q_2 = w^2: only z^2-free first component.
    const Germ f = fixtures::germ({{1, 3, 0}}, {{1, 0, 2}});
    const auto d = analyze_direction(f, Chart::U, 0.0);
    CHECK(!d.m);
    CHECK(d.cls == DirectionClass::Apparent);
    CHECK(d.degenerate);
    CHECK(abate_index(f, d) == Complex{});
}

TEST_CASE("multiplicities sum to k+1 on random germs, including conjugates") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        const int k = 2 + t % 3;
        const Germ f = fixtures::random_germ(rng, k);
        CHECK(multiplicity_sum(characteristic_directions(f)) == k + 1);
    }
    // Multiple directions survive a floating-point conjugation.
    const Germ f = fixtures::fuchsian_degenerate();
    for (int t = 0; t < 20; ++t) {
        const Germ g = f.conjugated(fixtures::random_linear(rng));
        const auto rep = characteristic_directions(g);
        CHECK(multiplicity_sum(rep) == 3);
        CHECK(rep.directions.size() == 2);
    }
}

TEST_CASE("degeneracy consistency and chart independence") {
    for (const Germ& f : {fixtures::hakim(), fixtures::cube_roots(), fixtures::fuchsian_degenerate(),
                          fixtures::irregular(), fixtures::apparent(), fixtures::irregular_b2()}) {
        for (const auto& d : characteristic_directions(f).directions) {
            CHECK(d.degenerate == (!d.m || *d.m >= 1));
            if (d.u0 == Complex{}) continue;
            const double mod = std::abs(d.u0);
            if (mod < 0.5 || mod > 2.0) continue;
            const Chart other = d.chart == Chart::U ? Chart::V : Chart::U;
            const auto e = analyze_direction(f, other, 1.0 / d.u0);
            CHECK(e.m == d.m);
            CHECK(e.n == d.n);
            CHECK(e.cls == d.cls);
        }
    }
}

// ---------------------------------------------------------------- indices

TEST_CASE("Hakim index examples") {
    const Germ f = fixtures::hakim();
    const auto rep = characteristic_directions(f);
    CHECK(std::abs(hakim_index(f, at(rep, Chart::U, 1.0)) - Complex(1.0)) < 1e-12);
    CHECK(std::abs(hakim_index(f, at(rep, Chart::U, 0.0)) - Complex(-1.0)) < 1e-12);
    const Germ g = fixtures::cube_roots();
    CHECK(std::abs(hakim_index(g, analyze_direction(g, Chart::U, 1.0)) - Complex(-3.0)) < 1e-12);
    const Germ h = fixtures::fuchsian_degenerate();
    CHECK_THROWS_AS(hakim_index(h, analyze_direction(h, Chart::U, 0.0)), DegenerateDirection);
}

TEST_CASE("Abate index examples") {
    const Germ f = fixtures::fuchsian_degenerate();
    const auto d = analyze_direction(f, Chart::U, 0.0);
    CHECK(std::abs(abate_index(f, d) - Complex(3.0)) < 1e-12);
    CHECK(std::abs(abate_index_contour(f, d) - Complex(3.0)) < 1e-9);

    const Germ a = fixtures::apparent();
    const auto da = analyze_direction(a, Chart::U, 0.0);
    CHECK(abate_index(a, da) == Complex{});
    CHECK(std::abs(abate_index_contour(a, da)) < 1e-9);

    // Reciprocity on the nondegenerate simple directions.
    for (const Germ& g : {fixtures::hakim(), fixtures::cube_roots()})
        for (const auto& dir : characteristic_directions(g).directions)
            CHECK(std::abs(abate_index(g, dir) * hakim_index(g, dir) - Complex(1.0)) < 1e-9);
}

TEST_CASE("rho regularity") {
    const Complex alpha{0.7, -0.2};
    const Germ f = fixtures::fuchsian_rho(alpha);
    const auto d = analyze_direction(f, Chart::U, 0.0);
    const auto reg = rho_regularity(f, d);
    CHECK(std::abs(reg.rho - alpha) < 1e-12);
    CHECK(reg.regular);

    const Germ g = fixtures::fuchsian_degenerate();
    const auto rg = rho_regularity(g, analyze_direction(g, Chart::U, 0.0));
    CHECK(rg.rho == Complex{});
    CHECK(!rg.regular);

    // Scaling (z, w) -> (c z, c w) keeps regularity and the normalised rho.
    const Germ s = f.conjugated(Mat2{{{Complex(2.0, 1.0), 0.0}, {0.0, Complex(2.0, 1.0)}}});
    const auto rs = rho_regularity(s, analyze_direction(s, Chart::U, 0.0));
    CHECK(rs.regular);
    CHECK(std::abs(rs.rho - alpha) < 1e-12);

    const Germ h = fixtures::hakim();
    CHECK_THROWS_AS(rho_regularity(h, analyze_direction(h, Chart::U, 0.0)), WrongClass);
}

TEST_CASE("indices are invariant under linear conjugation") {
    std::mt19937_64 rng(29);
    const Germ f = fixtures::fuchsian_degenerate();
    for (int t = 0; t < 10; ++t) {
        const Germ g = f.conjugated(fixtures::random_linear(rng));
        std::vector<double> idx;
        for (const auto& a : analyze(g).directions) idx.push_back(std::abs(a.indices.abate));
        std::sort(idx.begin(), idx.end());
        // Directions: [1:0] with Ind 3, [0:1] with Ind 1/i_H.
        const auto base = analyze(f);
        std::vector<double> ref;
        for (const auto& a : base.directions) ref.push_back(std::abs(a.indices.abate));
        std::sort(ref.begin(), ref.end());
        REQUIRE(idx.size() == ref.size());
        for (std::size_t i = 0; i < idx.size(); ++i) CHECK(std::abs(idx[i] - ref[i]) < 1e-8);
    }
}

// ---------------------------------------------------------------- criteria

TEST_CASE("region R examples") {
    CHECK(in_region_R(3.0, 1, 2) == Membership::Inside);
    CHECK(in_region_R(0.5, 1, 2) == Membership::Outside);
    CHECK(in_region_R(-2.0, 1, 2) == Membership::Outside);
    const RegionR r{1, 2};
    CHECK(r.half_plane_bound() == -1.0);
    CHECK(r.circle_center() == 0.5);
    CHECK(r.circle_radius() == 1.5);
    CHECK(in_region_R(2.0, 1, 2) == Membership::Boundary);  // on the circle
}

TEST_CASE("region S examples") {
    CHECK(in_region_S(0.25, 0) == Membership::Inside);
    CHECK(in_region_S(1.5, 0) == Membership::Outside);
    CHECK(in_region_S(1.0, 0) == Membership::Boundary);
}

TEST_CASE("at m = 0, R is 0 < Re(1/zeta) < 1 and R u S is Hakim's half-plane") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 1000; ++t) {
        const Complex z = fixtures::random_complex(rng, 4.0);
        const int k = 2 + t % 3;
        const Membership r = in_region_R(z, 0, k);
        const Membership s = in_region_S(z, 0);
        if (r == Membership::Boundary || s == Membership::Boundary) continue;
        const double h = (1.0 / z).real();
        CHECK((r == Membership::Inside) == (h > 0.0 && h < 1.0));
        CHECK((r == Membership::Inside || s == Membership::Inside) == (h > 0.0));
    }
}

TEST_CASE("R and S are disjoint for m >= 1 and cover the right half-plane for m = 0") {
    for (int i = 0; i < 200; ++i)
        for (int j = 0; j < 200; ++j) {
            const Complex z{-3.0 + 8.0 * (i + 0.5) / 200, -4.0 + 8.0 * (j + 0.5) / 200};
            CHECK(!(in_region_R(z, 1, 2) == Membership::Inside && in_region_S(z, 1) == Membership::Inside));
            if (z.real() > 0 && std::abs(std::abs(z - 0.5) - 0.5) > 1e-6)
                CHECK((in_region_R(z, 0, 2) == Membership::Inside || in_region_S(z, 0) == Membership::Inside));
        }
}

TEST_CASE("Lemma 1 condition") {
    CHECK(lemma1_condition(1.0, 1.0, 1, 0));
    CHECK(!lemma1_condition(-1.0, 1.0, 1, 0));
    CHECK(!lemma1_condition(-1.0, 1.0, 1, 2));
    CHECK(lemma1_condition(1.0 / 3, 1.0 / 3, 1, 2));
    CHECK_THROWS_AS(lemma1_condition(1.0, 0.0, 1, 0), std::invalid_argument);
}

TEST_CASE("eigenvalue condition") {
    const std::vector<Complex> good{1.0, 2.0}, bad{1.0, -0.1};
    CHECK(eigenvalue_condition(good));
    CHECK(!eigenvalue_condition(bad));
    const auto a = lemma1_eigenvalues(1.0, 1.0, 1, 2);
    CHECK(std::abs(a[0] - 1.0 / 3) < 1e-15);
    CHECK(std::abs(a[1] - 1.0 / 3) < 1e-15);
}

TEST_CASE("Lemma 1 condition matches the eigenvalue condition") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> ai(1, 4), bi(0, 6);
    int checked = 0;
    while (checked < 100) {
        const Complex c = fixtures::random_complex(rng, 3.0), d = fixtures::random_complex(rng, 3.0);
        const int a = ai(rng), b = bi(rng);
        if (std::abs(Complex(a) * c + Complex(b) * d) < 1e-3) continue;
        if (lemma1_membership(c, d, a, b) == Membership::Boundary) continue;
        const auto alphas = lemma1_eigenvalues(c, d, a, b);
        CHECK(lemma1_condition(c, d, a, b) == eigenvalue_condition(alphas));
        ++checked;
    }
}

TEST_CASE("Lemma 1 with the degenerate Fuchsian data reproduces region R") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 500; ++t) {
        const Complex zeta = fixtures::random_complex(rng, 5.0);
        const int m = 1 + t % 3, k = 2 + t % 2;
        const Complex beta = 1.0 / zeta;
        const Membership l = lemma1_membership(1.0 - double(m + 1) * beta, beta, k - 1, m * k + k - 1);
        const Membership r = in_region_R(zeta, m, k);
        if (l == Membership::Boundary || r == Membership::Boundary) continue;
        CHECK(l == r);
    }
}

TEST_CASE("verdicts on the fixtures") {
    const Germ h = fixtures::hakim();
    const auto v = verdict(h, Chart::U, 1.0);
    CHECK(v.conclusion == Conclusion::BasinExists);
    CHECK(v.justification == Justification::HakimTheorem);
    CHECK(std::abs(*v.tested_value - Complex(1.0)) < 1e-12);
    CHECK(verdict(h, Chart::U, 0.0).justification == Justification::NegativeHakimRemark);
    CHECK(verdict(h, Chart::V, 0.0).conclusion == Conclusion::NoBasinAlongDirection);

    CHECK(verdict(fixtures::irregular(2.0), Chart::U, 0.0).justification == Justification::Theorem1_Irregular);
    const auto vf = verdict(fixtures::fuchsian_degenerate(), Chart::U, 0.0);
    CHECK(vf.justification == Justification::Theorem2_FuchsianR);
    CHECK(std::abs(*vf.tested_value - Complex(3.0)) < 1e-12);
    CHECK(verdict(fixtures::apparent(), Chart::U, 0.0).justification == Justification::ApparentUndecided);
    CHECK(verdict(fixtures::dicritical(), Chart::U, 0.3).justification == Justification::DicriticalOutOfScope);
    CHECK_THROWS_AS(verdict(h, Chart::U, 0.5), DirectionNotCharacteristic);
}

TEST_CASE("regular case S and the no-criterion case") {
    // (z + zw, w + (1 + 1/zeta) w^2 + alpha z^3) has Ind = zeta at [1:0].
    auto make = [](Complex zeta, Complex alpha) {
        return fixtures::germ({{1, 1, 1}}, {{1.0 + 1.0 / zeta, 0, 2}, {alpha, 3, 0}});
    };
    const Complex zeta{0.2, 0.1};
    CHECK(in_region_S(zeta, 1) == Membership::Inside);
    const auto reg = verdict(make(zeta, 0.5), Chart::U, 0.0);
    CHECK(std::abs(*reg.tested_value - zeta) < 1e-12);
    CHECK(reg.justification == Justification::RegularCaseS);
    CHECK(verdict(make(zeta, 0.0), Chart::U, 0.0).justification == Justification::NoCriterionApplies);
}

TEST_CASE("verdicts are stable under linear conjugation") {
    std::mt19937_64 rng(43);
    for (const Germ& f : {fixtures::hakim(), fixtures::fuchsian_degenerate(), fixtures::irregular()}) {
        std::vector<std::string> base;
        for (const auto& a : analyze(f).directions) base.push_back(to_string(a.verdict.justification));
        std::sort(base.begin(), base.end());
        for (int t = 0; t < 20; ++t) {
            std::vector<std::string> got;
            for (const auto& a : analyze(f.conjugated(fixtures::random_linear(rng))).directions)
                got.push_back(to_string(a.verdict.justification));
            std::sort(got.begin(), got.end());
            CHECK(got == base);
        }
    }
}
