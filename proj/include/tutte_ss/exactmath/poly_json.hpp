#pragma once

#include "tutte_ss/exactmath/bipoly.hpp"
#include "tutte_ss/exactmath/unipoly.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace tutte_ss {

using Json = nlohmann::ordered_json;

// Canonical form: {"vars":["x","y"],"terms":[{"e":[i,j],"c":"<decimal>"}]}
// with terms ascending by (i, j), no zero coefficients, big integers as
// decimal strings.
Json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const Json& j);

// {"vars":[var],"terms":[{"e":[i],"c":"<a or a/b>"}]}; Laurent polynomials
// (or any with laurent = true) carry an extra "minExp".
Json to_json(const UniPoly& p, std::string_view var, bool laurent = false);
UniPoly unipoly_from_json(const Json& j);

std::string dump_canonical(const Json& j);

}  // namespace tutte_ss
