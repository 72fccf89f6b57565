#include "tutte_ss/recursion/triple_json.hpp"

#include "tutte_ss/errors.hpp"

namespace tutte_ss {

Json to_json(const ReducedTriple& triple) {
  Json out;
  out["family"] = std::string(to_string(triple.family));
  out["level"] = triple.level;
  out["t2"] = to_json(triple.t2);
  out["n"] = to_json(triple.n);
  out["m"] = to_json(triple.m);
  return out;
}

Json to_json(const TutteTriple& triple) {
  Json out;
  out["family"] = std::string(to_string(triple.family));
  out["level"] = triple.level;
  out["t2"] = to_json(triple.t2);
  out["t1"] = to_json(triple.t1);
  out["t0"] = to_json(triple.t0);
  return out;
}

ReducedTriple reduced_triple_from_json(const Json& j) {
  try {
    return {family_from_string(j.at("family").get<std::string>()), j.at("level").get<int>(),
            bipoly_from_json(j.at("t2")), bipoly_from_json(j.at("n")), bipoly_from_json(j.at("m"))};
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed triple JSON: ") + ex.what());
  }
}

}  // namespace tutte_ss
