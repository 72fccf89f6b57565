#pragma once

#include "tutte_ss/exactmath/poly_json.hpp"
#include "tutte_ss/recursion/engine.hpp"

namespace tutte_ss {

// {"family":…, "level":…, "t2":<poly>, "n":<poly>, "m":<poly>}
Json to_json(const ReducedTriple& triple);
// {"family":…, "level":…, "t2":<poly>, "t1":<poly>, "t0":<poly>}
Json to_json(const TutteTriple& triple);
ReducedTriple reduced_triple_from_json(const Json& j);

}  // namespace tutte_ss
