#pragma once

#include "tutte_ss/exactmath/poly_json.hpp"
#include "tutte_ss/graphs/builders.hpp"

namespace tutte_ss {

// {"n":…, "family":…, "vertices":[labels], "edges":[[u,v,label|null]],
//  "corners":[up,left,right]}
Json to_json(const BuiltGraph& g);

}  // namespace tutte_ss
