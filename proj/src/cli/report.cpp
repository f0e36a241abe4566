#include "parabolic/cli/report.hpp"

#include <cstdio>
#include <map>

namespace parabolic::cli {

namespace {

Json optional_complex(const std::optional<Complex>& c) { return c ? complex_to_json(*c) : Json(nullptr); }

std::string fmt(Complex c) {
    char buf[64];
    const double re = c.real() == 0.0 ? 0.0 : c.real();
    const double im = c.imag() == 0.0 ? 0.0 : c.imag();
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", re, im);
    return buf;
}

std::string fmt(const std::optional<Complex>& c) { return c ? fmt(*c) : "-"; }

}  // namespace

Json direction_to_json(const CharDirection& d) {
    if (d.is_infinity()) return "infinity";
    return {{"chart", to_string(d.chart)}, {"u0", complex_to_json(d.u0)}};
}

std::string direction_label(const CharDirection& d) {
    if (d.is_infinity()) return "[0:1]";
    return d.chart == Chart::U ? "[1:" + fmt(d.u0) + "]" : "[" + fmt(d.u0) + ":1]";
}

Json analysis_to_json(const GermAnalysis& a) {
    Json dirs = Json::array();
    for (const auto& da : a.directions) {
        const CharDirection& d = da.direction;
        const IndexReport& idx = da.indices;
        const Verdict& v = da.verdict;
        dirs.push_back({
            {"direction", direction_to_json(d)},
            {"multiplicity", d.multiplicity},
            {"degenerate", d.degenerate},
            {"m", d.m ? Json(*d.m) : Json("infinity")},
            {"n", d.n},
            {"class", to_string(d.cls)},
            {"lambda", complex_to_json(d.lambda)},
            {"hakim", optional_complex(idx.hakim)},
            {"abate", complex_to_json(idx.abate)},
            {"rho", optional_complex(idx.rho)},
            {"regular", idx.regular ? Json(*idx.regular) : Json(nullptr)},
            {"verdict",
             {{"conclusion", to_string(v.conclusion)},
              {"justification", to_string(v.justification)},
              {"tested_value", optional_complex(v.tested_value)}}},
        });
    }
    return {{"k", a.k}, {"dicritical", a.dicritical}, {"directions", std::move(dirs)}};
}

void write_table(const GermAnalysis& a, std::ostream& out) {
    out << "order k = " << a.k << (a.dicritical ? ", dicritical" : "") << '\n';
    if (a.directions.empty()) return;
    char line[512];
    std::snprintf(line, sizeof line, "%-28s %4s %3s %3s %-9s %-5s %-26s %-26s %-21s %s\n", "direction", "mult", "m",
                  "n", "class", "degen", "hakim", "abate", "conclusion", "justification");
    out << line;
    for (const auto& da : a.directions) {
        const CharDirection& d = da.direction;
        const std::string m = d.m ? std::to_string(*d.m) : "inf";
        std::snprintf(line, sizeof line, "%-28s %4d %3s %3d %-9s %-5s %-26s %-26s %-21s %s\n",
                      direction_label(d).c_str(), d.multiplicity, m.c_str(), d.n, to_string(d.cls),
                      d.degenerate ? "yes" : "no", fmt(da.indices.hakim).c_str(), fmt(da.indices.abate).c_str(),
                      to_string(da.verdict.conclusion), to_string(da.verdict.justification));
        out << line;
    }
}

Json orbit_to_json(const dynamics::OrbitResult& r, const std::vector<CharDirection>& dirs, double match_tol) {
    Json matched = nullptr;
    if (r.direction)
        if (const auto j = dynamics::match_direction(*r.direction, dirs, match_tol)) matched = direction_to_json(dirs[*j]);
    return {
        {"fate", dynamics::to_string(r.fate)},
        {"iterations", r.iterations},
        {"final_point", point_to_json(r.final_point)},
        {"direction", r.direction ? point_to_json(*r.direction) : Json(nullptr)},
        {"matched_direction", std::move(matched)},
    };
}

Json raster_summary(const dynamics::FateGrid& g, const std::vector<CharDirection>& dirs) {
    std::map<int, long> counts;
    for (int c : g.code) ++counts[c];
    Json out = Json::array();
    for (const auto& [code, n] : counts) {
        Json row = {{"code", code}, {"pixels", n}};
        switch (code) {
            case dynamics::kUndecided: row["fate"] = "Undecided"; break;
            case dynamics::kEscaped: row["fate"] = "Escaped"; break;
            case dynamics::kAttractedOther: row["fate"] = "AttractedOther"; break;
            default:
                row["fate"] = "AttractedAlong";
                row["direction"] = direction_to_json(dirs[static_cast<std::size_t>(code - dynamics::kAttractedDirection)]);
        }
        out.push_back(std::move(row));
    }
    return {{"width", g.width}, {"height", g.height}, {"fates", std::move(out)}};
}

}  // namespace parabolic::cli
