#include "parabolic/analysis.hpp"

namespace parabolic {

GermAnalysis analyze(const Germ& f) {
    const DirectionReport rep = characteristic_directions(f);
    GermAnalysis out;
    out.k = rep.k;
    out.dicritical = rep.dicritical;
    for (const auto& d : rep.directions) {
        DirectionAnalysis a{d, compute_indices(f, d), {}};
        a.verdict = verdict(f, d, a.indices);
        out.directions.push_back(std::move(a));
    }
    return out;
}

}  // namespace parabolic
