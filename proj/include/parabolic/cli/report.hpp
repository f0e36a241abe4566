#pragma once

#include <ostream>

#include "parabolic/analysis.hpp"
#include "parabolic/cli/json_io.hpp"
#include "parabolic/dynamics/orbit.hpp"
#include "parabolic/dynamics/raster.hpp"

namespace parabolic::cli {

/// {"chart": "U"|"V", "u0": {re, im}}, or the string "infinity" for [0:1].
Json direction_to_json(const CharDirection& d);
/// Projective label "[a:b]" of a direction for human-readable output.
std::string direction_label(const CharDirection& d);

/// Analysis report: order, dicritical flag and one record per direction in
/// the sorted order of characteristic_directions. Vanishing order m = infinity
/// is written as the string "infinity"; unavailable quantities as null.
Json analysis_to_json(const GermAnalysis& a);
/// Fixed-width table with one row per direction.
void write_table(const GermAnalysis& a, std::ostream& out);

/// Orbit result, with the characteristic direction the final direction
/// matches (within match_tol) or null.
Json orbit_to_json(const dynamics::OrbitResult& r, const std::vector<CharDirection>& dirs, double match_tol);

/// Pixel counts per fate code, labelled with the matching direction.
Json raster_summary(const dynamics::FateGrid& g, const std::vector<CharDirection>& dirs);

}  // namespace parabolic::cli
