#pragma once

#include <vector>

#include "parabolic/criteria.hpp"
#include "parabolic/directions.hpp"
#include "parabolic/germ.hpp"
#include "parabolic/indices.hpp"

namespace parabolic {

struct DirectionAnalysis {
    CharDirection direction;
    IndexReport indices;
    Verdict verdict;
};

/// Everything the static analysis knows about a germ: order, dicriticality
/// and, per characteristic direction, classification, indices and verdict.
struct GermAnalysis {
    int k = 0;
    bool dicritical = false;
    std::vector<DirectionAnalysis> directions;
};

GermAnalysis analyze(const Germ& f);

}  // namespace parabolic
