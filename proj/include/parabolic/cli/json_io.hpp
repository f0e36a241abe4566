#pragma once

#include <istream>
#include <json.hpp>
#include <string>

#include "parabolic/germ.hpp"

namespace parabolic::cli {

using Json = nlohmann::ordered_json;

/// Malformed input: unreadable JSON, wrong shape, bad flag values.
class InputError : public Error {
public:
    using Error::Error;
};

/// Parses a germ file {"components": [[monomial...], [monomial...]]} with
/// monomial = {"re": x, "im": y, "i": int >= 0, "j": int >= 0} standing for
/// (x + iy) z^i w^j. "im" defaults to 0. Repeated exponents are summed.
/// Throws InputError for shape problems and GermValidationError when the
/// parsed map is not a germ tangent to the identity.
Germ parse_germ(const Json& doc);
Germ parse_germ(std::istream& in);

/// Inverse of parse_germ: monomials in ascending (i, j) order.
Json germ_to_json(const Germ& f);

Json complex_to_json(Complex c);
Json point_to_json(const Point& p);

/// Serializes doc with every floating-point number written with 17
/// significant digits (so doubles round-trip exactly); -0 is written as 0 and
/// non-finite numbers as null. Output ends with a newline.
std::string dump(const Json& doc, int indent = 2);

}  // namespace parabolic::cli
