#include "parabolic/cli/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <map>

namespace parabolic::cli {

namespace {

BiPoly parse_component(const Json& comp, int index) {
    const std::string where = "components[" + std::to_string(index) + "]";
    if (!comp.is_array()) throw InputError(where + " must be an array of monomials");
    std::map<Exponent, Complex> acc;
    for (std::size_t t = 0; t < comp.size(); ++t) {
        const Json& m = comp[t];
        const std::string at = where + "[" + std::to_string(t) + "]";
        if (!m.is_object()) throw InputError(at + " must be an object");
        if (!m.contains("re") || !m["re"].is_number()) throw InputError(at + ".re must be a number");
        if (m.contains("im") && !m["im"].is_number()) throw InputError(at + ".im must be a number");
        for (const char* key : {"i", "j"}) {
            if (!m.contains(key) || !m[key].is_number_integer() || m[key].get<long long>() < 0)
                throw InputError(at + "." + key + " must be a nonnegative integer");
        }
        const Complex c(m["re"].get<double>(), m.contains("im") ? m["im"].get<double>() : 0.0);
        if (!is_finite(c)) throw InputError(at + " has a non-finite coefficient");
        acc[{m["i"].get<int>(), m["j"].get<int>()}] += c;
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == Complex{}; });
    return BiPoly(std::move(acc));
}

void format_number(std::string& out, double x) {
    if (!std::isfinite(x)) {
        out += "null";
        return;
    }
    if (x == 0.0) x = 0.0;  // drops the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
}

void dump_rec(std::string& out, const Json& j, int indent, int level) {
    const auto newline = [&](int lvl) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * lvl), ' ');
    };
    switch (j.type()) {
        case Json::value_t::number_float: format_number(out, j.get<double>()); return;
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                newline(level + 1);
                out += Json(key).dump();
                out += indent < 0 ? ":" : ": ";
                dump_rec(out, value, indent, level + 1);
            }
            newline(level);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ',';
                newline(level + 1);
                dump_rec(out, j[i], indent, level + 1);
            }
            newline(level);
            out += ']';
            return;
        }
        default: out += j.dump(); return;
    }
}

}  // namespace

Germ parse_germ(const Json& doc) {
    if (!doc.is_object() || !doc.contains("components")) throw InputError("germ file: missing \"components\"");
    const Json& comps = doc["components"];
    if (!comps.is_array() || comps.size() != 2) throw InputError("germ file: \"components\" must hold exactly two arrays");
    return Germ::validate(parse_component(comps[0], 0), parse_component(comps[1], 1));
}

Germ parse_germ(std::istream& in) {
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("germ file: ") + e.what());
    }
    return parse_germ(doc);
}

Json germ_to_json(const Germ& f) {
    Json comps = Json::array();
    for (const BiPoly* p : {&f.f1(), &f.f2()}) {
        Json comp = Json::array();
        for (const auto& [e, c] : p->coeffs())
            comp.push_back({{"re", c.real()}, {"im", c.imag()}, {"i", e.first}, {"j", e.second}});
        comps.push_back(std::move(comp));
    }
    return {{"components", std::move(comps)}};
}

Json complex_to_json(Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

Json point_to_json(const Point& p) { return Json::array({complex_to_json(p[0]), complex_to_json(p[1])}); }

std::string dump(const Json& doc, int indent) {
    std::string out;
    dump_rec(out, doc, indent, 0);
    out += '\n';
    return out;
}

}  // namespace parabolic::cli
