// Acceptance checks: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "parabolic/analysis.hpp"
#include "parabolic/cli/app.hpp"
#include "parabolic/dynamics/coordinates.hpp"
#include "parabolic/dynamics/fatou.hpp"
#include "parabolic/dynamics/normal_form.hpp"
#include "parabolic/dynamics/orbit.hpp"
#include "parabolic/dynamics/seeding.hpp"
#include "parabolic/residue.hpp"

using namespace parabolic;
using namespace parabolic::dynamics;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit;  // seconds
    std::function<Outcome()> check;
};

std::string format(const char* fmt, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

std::vector<Germ> fixture_set() {
    return {fixtures::hakim(),        fixtures::cube_roots(),   fixtures::irregular(),
            fixtures::irregular(2.5), fixtures::fuchsian_degenerate(), fixtures::fuchsian_rho(0.7),
            fixtures::apparent(),     fixtures::irregular_b1(), fixtures::irregular_b2()};
}

Outcome classification_table() {
    struct Row {
        Germ f;
        Complex u0;
        int m, n;
        DirectionClass cls;
    };
    const std::vector<Row> rows{
        {fixtures::hakim(), 1.0, 0, 1, DirectionClass::Fuchsian},
        {fixtures::irregular(), 0.0, 0, 2, DirectionClass::Irregular},
        {fixtures::fuchsian_degenerate(), 0.0, 1, 2, DirectionClass::Fuchsian},
        {fixtures::apparent(), 0.0, 1, 1, DirectionClass::Apparent},
    };
    Outcome o;
    for (const auto& r : rows) {
        const auto d = analyze_direction(r.f, Chart::U, r.u0);
        const bool ok = d.m == r.m && d.n == r.n && d.cls == r.cls && classify(r.m, r.n) == r.cls;
        o.ok = o.ok && ok;
        o.detail += format("(%d,%d)->%s ", d.m ? *d.m : -1, d.n, to_string(d.cls));
    }
    return o;
}

Outcome residue_agreement() {
    std::mt19937_64 rng(101);
    double worst = 0.0;
    int dirs = 0;
    for (int t = 0; t < 100; ++t) {
        const Germ f = fixtures::random_germ(rng, 2 + t % 2);
        for (const auto& d : characteristic_directions(f).directions) {
            worst = std::max(worst, std::abs(abate_index(f, d) - abate_index_contour(f, d)));
            ++dirs;
        }
    }
    return {worst < 1e-9, format("%d directions, max |series - contour| = %.2e", dirs, worst)};
}

Outcome reciprocity() {
    double worst = 0.0;
    int count = 0;
    for (const Germ& f : fixture_set())
        for (const auto& d : characteristic_directions(f).directions) {
            if (d.degenerate || d.n != 1) continue;
            worst = std::max(worst, std::abs(abate_index(f, d) * hakim_index(f, d) - 1.0));
            ++count;
        }
    return {count > 0 && worst < 1e-9, format("%d directions, max |Ind i_H - 1| = %.2e", count, worst)};
}

Outcome apparent_zero() {
    std::mt19937_64 rng(103);
    std::vector<Germ> germs{fixtures::apparent()};
    for (int t = 0; t < 50; ++t) germs.push_back(fixtures::random_apparent_germ(rng, 2 + t % 2));
    double worst_ind = 0.0, worst_raw = 0.0;
    bool classes_ok = true;
    for (const Germ& f : germs) {
        const auto d = analyze_direction(f, Chart::U, 0.0);
        classes_ok = classes_ok && d.cls == DirectionClass::Apparent;
        worst_ind = std::max(worst_ind, std::abs(compute_indices(f, d).abate));
        // Without the class shortcut: residue of p/r, holomorphic at u0.
        const ChartPolys cp = chart_polys(f, Chart::U);
        worst_raw = std::max(worst_raw, std::abs(series_residue(cp.p, cp.r, 0.0)));
    }
    return {classes_ok && worst_ind < 1e-12 && worst_raw < 1e-12,
            format("%zu germs, max |Ind| = %.2e, max raw series residue = %.2e", germs.size(), worst_ind, worst_raw)};
}

struct Signature {
    DirectionClass cls;
    int m, n;
    Complex ind;
};

std::vector<Signature> signatures(const Germ& f) {
    std::vector<Signature> out;
    for (const auto& a : analyze(f).directions)
        out.push_back({a.direction.cls, a.direction.m ? *a.direction.m : -1, a.direction.n, a.indices.abate});
    return out;
}

Outcome conjugation_invariance() {
    std::mt19937_64 rng(105);
    double worst = 0.0;
    int failures = 0, total = 0;
    for (const Germ& f : fixture_set()) {
        const auto base = signatures(f);
        for (int t = 0; t < 20; ++t) {
            ++total;
            auto got = signatures(f.conjugated(fixtures::random_linear(rng)));
            bool ok = got.size() == base.size();
            for (const auto& s : base) {
                if (!ok) break;
                auto it = std::find_if(got.begin(), got.end(), [&](const Signature& g) {
                    return g.cls == s.cls && g.m == s.m && g.n == s.n && std::abs(g.ind - s.ind) < 1e-8;
                });
                if (it == got.end()) {
                    ok = false;
                    break;
                }
                worst = std::max(worst, std::abs(it->ind - s.ind));
                got.erase(it);
            }
            failures += !ok;
        }
    }
    return {failures == 0, format("%d conjugates, %d mismatched multisets, max |dInd| = %.2e", total, failures, worst)};
}

Outcome region_logic() {
    bool ok = in_region_R(3.0, 1, 2) == Membership::Inside && in_region_R(0.5, 1, 2) == Membership::Outside;
    std::mt19937_64 rng(107);
    int mismatches_r = 0, mismatches_union = 0, tested = 0;
    for (int t = 0; t < 1000; ++t) {
        const Complex z = fixtures::random_complex(rng, 4.0);
        const Membership r = in_region_R(z, 0, 2), s = in_region_S(z, 0);
        if (r == Membership::Boundary || s == Membership::Boundary) continue;
        ++tested;
        const double h = (1.0 / z).real();
        mismatches_r += (r == Membership::Inside) != (h > 0.0 && h < 1.0);
        mismatches_union += (r == Membership::Inside || s == Membership::Inside) != (h > 0.0);
    }
    // R u S covers a grid of the right half-plane for m = 0.
    int uncovered = 0;
    for (int i = 0; i < 100; ++i)
        for (int j = 0; j < 100; ++j) {
            const Complex z{0.01 + 5.0 * i / 100, -5.0 + 10.0 * (j + 0.5) / 100};
            if (in_region_R(z, 0, 2) != Membership::Inside && in_region_S(z, 0) != Membership::Inside &&
                std::abs(std::abs(z - 0.5) - 0.5) > kBoundaryTol)
                ++uncovered;
        }
    ok = ok && mismatches_r == 0 && mismatches_union == 0 && uncovered == 0;
    return {ok, format("examples ok; m=0: %d samples, R<=>0<Re(1/z)<1 mismatches %d, RuS<=>Re(1/z)>0 mismatches %d, "
                       "uncovered grid points %d",
                       tested, mismatches_r, mismatches_union, uncovered)};
}

Outcome multiplicity_count() {
    std::mt19937_64 rng(109);
    int bad = 0;
    for (int t = 0; t < 200; ++t) {
        const int k = 2 + t % 3;
        const auto rep = characteristic_directions(fixtures::random_germ(rng, k));
        int sum = 0;
        for (const auto& d : rep.directions) sum += d.multiplicity;
        bad += rep.dicritical || sum != k + 1;
    }
    return {bad == 0, format("200 germs, %d with sum != k+1", bad)};
}

Outcome v_invariance() {
    const double pi = std::numbers::pi;
    const Germ b1 = fixtures::irregular_b1(), b2 = fixtures::irregular_b2();
    struct Case {
        const char* name;
        NormalFormMap G;
        SectorRegion V;
    };
    const std::vector<Case> cases{
        {"model", model_map(), {50.0, 2.0, pi / 8}},
        {"b1", irregular_normal_form(b1, analyze_direction(b1, Chart::U, 0.0), 2.0), {50.0, 2.0, pi / 8}},
        {"b2", irregular_normal_form(b2, analyze_direction(b2, Chart::U, 0.0), 4.0), {50.0, 4.0, pi / 8}},
    };
    Outcome o;
    for (const auto& c : cases) {
        const auto rep = check_V_invariance(c.G, c.V, 10000, 42);
        o.ok = o.ok && rep.violations == 0 && rep.hypothesis_ok;
        o.detail += format("%s: %d/%d exits (N=%g)  ", c.name, rep.violations, rep.samples, c.V.N);
    }
    return o;
}

Outcome fatou_translation() {
    const PlaneMap G = model_map().map;
    const SectorRegion V{5.0, 2.0, std::numbers::pi / 8};
    std::mt19937_64 rng(111);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const Point p = sample_V(V, rng);
        const auto a = fatou_coordinate(G, p), b = fatou_coordinate(G, G(p));
        worst = std::max({worst, std::abs(b.phi1 - a.phi1 - 1.0), std::abs(b.phi2 - a.phi2)});
    }
    const auto in_region = [&](const Point& p) { return V.contains(p); };
    const auto phi = [&](const Point& p) {
        const auto r = fatou_coordinate(G, p);
        return Point{r.phi1, r.phi2};
    };
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double consistency = 0.0;
    long max_n = 0;
    for (int i = 0; i < 100; ++i) {
        const Point p{Complex(1.0 + 10.0 * U(rng), 4.0 * U(rng) - 2.0), Complex(5.5 + 2.0 * U(rng), U(rng) - 0.5)};
        const auto r = phi_global(G, in_region, phi, p, 10000);
        consistency = std::max(consistency, r.consistency);
        max_n = std::max(max_n, r.n);
    }
    return {worst < 1e-8 && consistency < 1e-8,
            format("max |Phi(G p) - Phi(p) - (1,0)| = %.2e; phi_global consistency %.2e (n up to %ld)", worst,
                   consistency, max_n)};
}

Outcome concordance_check() {
    OrbitConfig cfg;
    cfg.max_iter = 100000;
    struct Case {
        const char* name;
        Germ f;
        Complex u0;
    };
    const std::vector<Case> cases{{"hakim [1:1]", fixtures::hakim(), 1.0},
                                  {"irregular [1:0]", fixtures::irregular(), 0.0},
                                  {"fuchsian Ind=3 [1:0]", fixtures::fuchsian_degenerate(), 0.0}};
    Outcome o;
    for (const auto& c : cases) {
        const auto dir = analyze_direction(c.f, Chart::U, c.u0);
        const auto rep = concordance(c.f, dir, basin_seeds(c.f, dir, 50, 42), cfg);
        o.ok = o.ok && rep.along_predicted >= 45 && rep.escaped == 0;
        o.detail += format("%s %d/50 along, %d escaped; ", c.name, rep.along_predicted, rep.escaped);
    }
    const CompiledMap f(fixtures::hakim());
    Point p{0.05, 0.05};
    for (int n = 0; n < 10000; ++n) p = f(p);
    const double rate = std::abs(10000.0 * p[0] - 1.0);
    o.ok = o.ok && rate < 0.2;
    o.detail += format("|n z_n - 1| = %.3f at n = 1e4", rate);
    return o;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Outcome determinism() {
    const auto dir = std::filesystem::temp_directory_path();
    const auto germ = dir / "parabolic_acceptance_germ.json";
    {
        std::ofstream out(germ);
        out << R"({"components": [[{"re": 1, "i": 1, "j": 0}, {"re": -1, "i": 2, "j": 0}],)"
            << R"( [{"re": 1, "i": 0, "j": 1}, {"re": -1, "i": 0, "j": 2}, {"re": 0.3, "im": 0.1, "i": 1, "j": 1}]]})";
    }
    auto run = [](std::vector<std::string> args) {
        args.insert(args.begin(), "parabolic");
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return std::pair{code, out.str()};
    };
    const auto a1 = run({"analyze", germ.string()});
    const auto a2 = run({"analyze", germ.string()});
    bool ok = a1.first == 0 && a1 == a2;

    std::vector<std::string> files;
    for (const auto& [tag, threads] : {std::pair{"a", "1"}, {"b", "1"}, {"c", "4"}}) {
        const auto out = dir / (std::string("parabolic_acceptance_") + tag + ".ppm");
        const auto r = run({"raster", germ.string(), "--out", out.string(), "--width", "32", "--height", "32",
                            "--e1", "1,0,1,0", "--e2", "0,1,0,1", "--max-iter", "20000", "--threads", threads});
        ok = ok && r.first == 0;
        files.push_back(slurp(out));
        std::filesystem::remove(out);
    }
    std::filesystem::remove(germ);
    ok = ok && !files[0].empty() && files[0] == files[1] && files[0] == files[2];
    return {ok, format("analyze %zu bytes identical; raster %zu bytes identical over runs and 1/4 threads",
                       a1.second.size(), files[0].size())};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "classification table fidelity", 1.0, classification_table},
        {2, "residue agreement", 10.0, residue_agreement},
        {3, "reciprocity Ind * i_H = 1", 10.0, reciprocity},
        {4, "apparent => index 0", 10.0, apparent_zero},
        {5, "conjugation invariance", 30.0, conjugation_invariance},
        {6, "region logic", 10.0, region_logic},
        {7, "multiplicity count", 10.0, multiplicity_count},
        {8, "V-invariance", 30.0, v_invariance},
        {9, "Fatou translation property", 30.0, fatou_translation},
        {10, "verdict/dynamics concordance", 60.0, concordance_check},
        {11, "determinism", 60.0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.time_limit;
        const bool pass = o.ok && in_time;
        failed += !pass;
        std::printf("%s criterion %2d: %s -- %s [%.2f s%s]\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    o.detail.c_str(), secs, in_time ? "" : ", over time limit");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
