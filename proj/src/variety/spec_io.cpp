#include "cryslat/variety/spec_io.hpp"

#include <fstream>
#include <sstream>

#include "cryslat/arith/poly_parse.hpp"

namespace cryslat {

using nlohmann::json;

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw SpecError("parse", "coefficient must be an integer or a decimal string");
}

json poly_terms_to_json(const IntPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(json::array({e, int_to_json(c)}));
  return terms;
}

json spec_to_json(const PairSpec& spec) {
  json j;
  j["name"] = spec.name;
  j["p"] = spec.p;
  j["n"] = spec.n;
  j["d"] = spec.d;
  j["variables"] = spec.Q.variables();
  j["hyperplane_index"] = spec.hyperplane_index;
  if (spec.weights) j["weights"] = *spec.weights;
  j["terms"] = poly_terms_to_json(spec.Q);
  return j;
}

PairSpec spec_from_json(const json& j) {
  try {
    const long p = j.at("p").get<long>();
    const int n = j.at("n").get<int>();
    const int d = j.at("d").get<int>();
    std::vector<std::string> vars;
    if (j.contains("variables")) {
      vars = j.at("variables").get<std::vector<std::string>>();
    } else {
      for (int i = 0; i < n + 2; ++i) vars.push_back("x" + std::to_string(i));
    }
    std::optional<std::vector<int>> weights;
    if (j.contains("weights") && !j.at("weights").is_null()) weights = j.at("weights").get<std::vector<int>>();
    IntPoly Q(vars, weights);
    if (j.contains("equation")) {
      if (j.contains("terms")) throw SpecError("parse", "give either 'terms' or 'equation', not both");
      try {
        Q = parse_polynomial(j.at("equation").get<std::string>(), vars, weights);
      } catch (const std::invalid_argument& e) {
        throw SpecError("parse", e.what());
      }
    } else {
      for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) throw SpecError("parse", "each term must be [exponent-vector, coefficient]");
        const auto e = t[0].get<std::vector<int>>();
        if (e.size() != vars.size()) throw SpecError("parse", "exponent vector arity differs from the variable count");
        Q.add_term(e, int_from_json(t[1]));
      }
    }
    std::optional<size_t> h;
    if (j.contains("hyperplane_index") && !j.at("hyperplane_index").is_null()) h = j.at("hyperplane_index").get<size_t>();
    return PairSpec::make(p, n, d, Q, h, weights, j.value("name", std::string()));
  } catch (const json::exception& e) {
    throw SpecError("parse", e.what());
  }
}

std::string serialize_spec(const PairSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

PairSpec parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SpecError("parse", e.what());
  }
  return spec_from_json(j);
}

PairSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("parse", "cannot open spec file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

}  // namespace cryslat
