#include "parabolic/cli/app.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>

#include "parabolic/analysis.hpp"
#include "parabolic/cli/json_io.hpp"
#include "parabolic/cli/report.hpp"
#include "parabolic/criteria.hpp"
#include "parabolic/dynamics/fatou.hpp"
#include "parabolic/dynamics/normal_form.hpp"
#include "parabolic/dynamics/orbit.hpp"
#include "parabolic/dynamics/raster.hpp"

namespace parabolic::cli {

namespace {

/// Failure to read or write a file.
class IoError : public Error {
public:
    using Error::Error;
};

std::vector<double> parse_numbers(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, end - pos);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || !std::isfinite(v))
            throw InputError(flag + ": cannot parse '" + item + "' as a number in '" + text + "'");
        out.push_back(v);
        pos = end + 1;
    }
    return out;
}

std::vector<double> parse_exact(const std::string& text, const std::string& flag, std::size_t count) {
    auto v = parse_numbers(text, flag);
    if (v.size() != count)
        throw InputError(flag + ": expected " + std::to_string(count) + " comma-separated numbers, got '" + text + "'");
    return v;
}

Complex parse_complex(const std::string& text, const std::string& flag) {
    const auto v = parse_exact(text, flag, 2);
    return {v[0], v[1]};
}

Point parse_point(const std::string& text, const std::string& flag) {
    const auto v = parse_exact(text, flag, 4);
    return {Complex(v[0], v[1]), Complex(v[2], v[3])};
}

Germ load_germ(const std::string& path) {
    if (path == "-") return parse_germ(std::cin);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open germ file '" + path + "'");
    return parse_germ(in);
}

struct OrbitFlags {
    long max_iter = dynamics::OrbitConfig{}.max_iter;
    double attract_radius = dynamics::OrbitConfig{}.attract_radius;
    double escape_radius = dynamics::OrbitConfig{}.escape_radius;
    double tangency_tol = dynamics::OrbitConfig{}.tangency_tol;
    int window = dynamics::OrbitConfig{}.direction_window;

    void add_to(CLI::App& app) {
        app.add_option("--max-iter", max_iter, "Iteration budget")->capture_default_str();
        app.add_option("--attract-radius", attract_radius, "Norm below which an orbit may count as attracted")
            ->capture_default_str();
        app.add_option("--escape-radius", escape_radius, "Norm above which an orbit has escaped")->capture_default_str();
        app.add_option("--tangency-tol", tangency_tol, "Projective tolerance for a stabilized direction")
            ->capture_default_str();
        app.add_option("--window", window, "Iterates over which the direction must be stable")->capture_default_str();
    }

    dynamics::OrbitConfig config() const {
        dynamics::OrbitConfig cfg;
        cfg.max_iter = max_iter;
        cfg.attract_radius = attract_radius;
        cfg.escape_radius = escape_radius;
        cfg.tangency_tol = tangency_tol;
        cfg.direction_window = window;
        cfg.validate();
        return cfg;
    }
};

std::string lower_extension(const std::string& path) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos) return "";
    std::string ext = path.substr(dot + 1);
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext;
}

void print_membership(std::ostream& out, Membership m) { out << to_string(m) << '\n'; }

}  // namespace

std::uint64_t sampling_seed() {
    const char* env = std::getenv("PARABOLIC_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    std::uint64_t seed = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto [ptr, ec] = std::from_chars(env, end, seed);
    if (ec != std::errc{} || ptr != end) throw InputError("PARABOLIC_SEED must be a nonnegative integer");
    return seed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local dynamics of holomorphic germs of C^2 tangent to the identity", "parabolic"};
    app.require_subcommand(1);

    // analyze
    std::string germ_path;
    bool as_table = false;
    auto* analyze_cmd = app.add_subcommand("analyze", "Characteristic directions, indices and basin verdicts");
    analyze_cmd->add_option("germ", germ_path, "Germ file (JSON), or - for stdin")->required();
    auto* json_flag = analyze_cmd->add_flag("--json", "JSON report (default)");
    analyze_cmd->add_flag("--table", as_table, "Human-readable table")->excludes(json_flag);

    // orbit
    std::string start;
    double match_tol = 0.2;
    OrbitFlags orbit_flags;
    auto* orbit_cmd = app.add_subcommand("orbit", "Iterate one orbit and classify its fate");
    orbit_cmd->add_option("germ", germ_path, "Germ file (JSON), or - for stdin")->required();
    orbit_cmd->add_option("--start", start, "Starting point zr,zi,wr,wi")->required();
    orbit_cmd->add_option("--match-tol", match_tol, "Projective tolerance for naming the limit direction")
        ->capture_default_str();
    orbit_flags.add_to(*orbit_cmd);

    // raster
    std::string out_path, origin = "0,0,0,0", e1 = "1,0,0,0", e2 = "0,0,1,0";
    dynamics::Slice slice;
    int threads = 1;
    auto* raster_cmd = app.add_subcommand("raster", "Fate of every pixel of a real 2-plane slice");
    raster_cmd->add_option("germ", germ_path, "Germ file (JSON), or - for stdin")->required();
    raster_cmd->add_option("--out", out_path, "Output file, .ppm or .csv")->required();
    raster_cmd->add_option("--origin", origin, "Slice origin zr,zi,wr,wi")->capture_default_str();
    raster_cmd->add_option("--e1", e1, "First spanning vector (horizontal)")->capture_default_str();
    raster_cmd->add_option("--e2", e2, "Second spanning vector (vertical)")->capture_default_str();
    raster_cmd->add_option("--width", slice.width, "Pixels per row")->capture_default_str();
    raster_cmd->add_option("--height", slice.height, "Rows")->capture_default_str();
    raster_cmd->add_option("--extent", slice.extent, "Half-width of the slice in both coordinates")
        ->capture_default_str();
    raster_cmd->add_option("--threads", threads, "Worker threads")->capture_default_str();
    raster_cmd->add_option("--match-tol", match_tol, "Projective tolerance for naming the limit direction")
        ->capture_default_str();
    orbit_flags.add_to(*raster_cmd);

    // check
    std::string region, zeta, lemma1;
    int m = 0, k = 2;
    auto* check_cmd = app.add_subcommand("check", "Region membership tests of the basin criteria");
    auto* region_opt = check_cmd->add_option("--region", region, "R or S")->check(CLI::IsMember({"R", "S"}));
    auto* m_opt = check_cmd->add_option("--m", m, "Vanishing order m");
    check_cmd->add_option("--k", k, "Order k of the germ")->capture_default_str();
    auto* zeta_opt = check_cmd->add_option("--zeta", zeta, "Index value re,im");
    auto* lemma1_opt = check_cmd->add_option("--lemma1", lemma1, "c,d,a,b or cr,ci,dr,di,a,b");
    lemma1_opt->excludes(region_opt)->excludes(zeta_opt)->excludes(m_opt);

    // fatou
    std::string point;
    int samples = 0;
    double tol = 1e-12;
    long fatou_max_iter = 1000000;
    auto* fatou_cmd = app.add_subcommand("fatou", "Fatou coordinate of the model map (x + 1, y + 1/x)");
    fatou_cmd->add_option("--point", point, "Point xr,xi,yr,yi with Re x > 0")->required();
    fatou_cmd->add_option("--tol", tol, "Convergence tolerance")->capture_default_str();
    fatou_cmd->add_option("--max-iter", fatou_max_iter, "Iteration budget")->capture_default_str();
    fatou_cmd->add_option("--samples", samples,
                          "Also check Phi(G(p)) = Phi(p) + (1, 0) on this many points of V(50, 2, pi/8) drawn "
                          "with the PARABOLIC_SEED seed")
        ->capture_default_str();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (analyze_cmd->parsed()) {
            const GermAnalysis a = analyze(load_germ(germ_path));
            if (as_table)
                write_table(a, out);
            else
                out << dump(analysis_to_json(a));
        } else if (orbit_cmd->parsed()) {
            const Point p0 = parse_point(start, "--start");
            const dynamics::OrbitConfig cfg = orbit_flags.config();
            const Germ f = load_germ(germ_path);
            const auto dirs = characteristic_directions(f).directions;
            out << dump(orbit_to_json(dynamics::iterate_orbit(f, p0, cfg), dirs, match_tol));
        } else if (raster_cmd->parsed()) {
            slice.origin = parse_point(origin, "--origin");
            slice.e1 = parse_point(e1, "--e1");
            slice.e2 = parse_point(e2, "--e2");
            slice.validate();
            const std::string ext = lower_extension(out_path);
            if (ext != "ppm" && ext != "csv") throw InputError("--out: file must end in .ppm or .csv");
            dynamics::RasterOptions opts;
            opts.orbit = orbit_flags.config();
            opts.threads = threads;
            opts.match_tol = match_tol;
            const Germ f = load_germ(germ_path);
            const auto grid = dynamics::raster_slice(f, slice, opts);
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw IoError("cannot open '" + out_path + "' for writing");
            if (ext == "ppm")
                dynamics::write_ppm(grid, file);
            else
                dynamics::write_csv(grid, file);
            file.close();
            if (!file) throw IoError("failed writing '" + out_path + "'");
            out << dump(raster_summary(grid, characteristic_directions(f).directions));
        } else if (check_cmd->parsed()) {
            if (!lemma1.empty()) {
                const auto v = parse_numbers(lemma1, "--lemma1");
                Complex c, d;
                double a = 0, b = 0;
                if (v.size() == 4) {
                    c = v[0], d = v[1], a = v[2], b = v[3];
                } else if (v.size() == 6) {
                    c = {v[0], v[1]}, d = {v[2], v[3]}, a = v[4], b = v[5];
                } else {
                    throw InputError("--lemma1: expected c,d,a,b or cr,ci,dr,di,a,b");
                }
                if (!(a > 0) || b < 0 || d == Complex{}) throw InputError("--lemma1: need a > 0, b >= 0, d != 0");
                print_membership(out, lemma1_membership(c, d, a, b));
                const Complex t = c / d;
                out << "c/d = " << dump(complex_to_json(t), -1);
                out << "half_plane: Re(c/d) > " << dump(-b / a, -1);
                out << "excluded_disk: center " << dump(-b / (2 * a), -1) << "excluded_disk: radius "
                    << dump(b / (2 * a), -1);
            } else {
                if (region.empty() || zeta.empty() || m_opt->count() == 0)
                    throw InputError("check: need --region R|S, --m and --zeta (or --lemma1)");
                if (m < 0 || k < 2) throw InputError("check: need m >= 0 and k >= 2");
                const Complex z = parse_complex(zeta, "--zeta");
                if (region == "R") {
                    const RegionR R{m, k};
                    print_membership(out, R.contains(z));
                    out << "half_plane: Re(zeta) > " << dump(R.half_plane_bound(), -1);
                    out << "excluded_disk: center " << dump(R.circle_center(), -1) << "excluded_disk: radius "
                        << dump(R.circle_radius(), -1);
                } else {
                    const RegionS S{m};
                    print_membership(out, S.contains(z));
                    out << "disk: center " << dump(S.center(), -1) << "disk: radius " << dump(S.radius(), -1);
                }
            }
        } else if (fatou_cmd->parsed()) {
            const Point p0 = parse_point(point, "--point");
            if (samples < 0) throw InputError("--samples must be nonnegative");
            const auto G = dynamics::model_map().map;
            const auto r = dynamics::fatou_coordinate(G, p0, tol, fatou_max_iter);
            Json doc = {{"map", "model"},
                        {"phi1", complex_to_json(r.phi1)},
                        {"phi2", complex_to_json(r.phi2)},
                        {"converged", r.converged},
                        {"iterations", r.iterations}};
            if (samples > 0) {
                const std::uint64_t seed = sampling_seed();
                std::mt19937_64 rng(seed);
                const dynamics::SectorRegion V{50.0, 2.0, std::numbers::pi / 8};
                double worst = 0.0;
                for (int i = 0; i < samples; ++i) {
                    const Point p = dynamics::sample_V(V, rng);
                    const auto a = dynamics::fatou_coordinate(G, p, tol, fatou_max_iter);
                    const auto b = dynamics::fatou_coordinate(G, G(p), tol, fatou_max_iter);
                    worst = std::max({worst, std::abs(b.phi1 - a.phi1 - 1.0), std::abs(b.phi2 - a.phi2)});
                }
                doc["translation_check"] = {{"samples", samples}, {"seed", seed}, {"max_residual", worst}};
            }
            out << dump(doc);
        }
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const GermValidationError& e) {
        err << "invalid germ (" << to_string(e.defect()) << "): " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}

}  // namespace parabolic::cli
