#include "tutte_ss/exactmath/poly_json.hpp"

#include "tutte_ss/errors.hpp"

namespace tutte_ss {

Json to_json(const BiPoly& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json term;
    term["e"] = Json::array({t.xe, t.ye});
    term["c"] = to_string(t.c);
    terms.push_back(std::move(term));
  }
  Json out;
  out["vars"] = Json::array({"x", "y"});
  out["terms"] = std::move(terms);
  return out;
}

BiPoly bipoly_from_json(const Json& j) {
  try {
    if (j.at("vars") != Json::array({"x", "y"})) {
      throw Error(ErrorKind::InvalidArgument, "bivariate polynomial must use vars [x, y]");
    }
    std::vector<BiPoly::Term> terms;
    for (const auto& term : j.at("terms")) {
      const auto& e = term.at("e");
      if (e.size() != 2) throw Error(ErrorKind::InvalidArgument, "term exponent must have two entries");
      terms.push_back({e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>(),
                       BigInt(term.at("c").get<std::string>(), 10)});
    }
    return BiPoly::from_terms(std::move(terms));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed polynomial JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed coefficient: ") + ex.what());
  }
}

Json to_json(const UniPoly& p, std::string_view var, bool laurent) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["e"] = Json::array({e});
    term["c"] = to_string(c);
    terms.push_back(std::move(term));
  }
  Json out;
  out["vars"] = Json::array({std::string(var)});
  if (laurent || p.is_laurent()) out["minExp"] = p.min_exponent();
  out["terms"] = std::move(terms);
  return out;
}

UniPoly unipoly_from_json(const Json& j) {
  try {
    if (j.at("vars").size() != 1) throw Error(ErrorKind::InvalidArgument, "univariate polynomial needs one var");
    UniPoly::Terms terms;
    for (const auto& term : j.at("terms")) {
      const auto& e = term.at("e");
      if (e.size() != 1) throw Error(ErrorKind::InvalidArgument, "term exponent must have one entry");
      terms[e[0].get<UniPoly::Exponent>()] += parse_rational(term.at("c").get<std::string>());
    }
    return UniPoly(std::move(terms));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed polynomial JSON: ") + ex.what());
  }
}

std::string dump_canonical(const Json& j) { return j.dump(); }

}  // namespace tutte_ss
