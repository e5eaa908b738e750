#pragma once

#include <string>

#include "json.hpp"
#include "cryslat/variety/pair_spec.hpp"

namespace cryslat {

/// Spec documents are JSON objects:
///   { "name": "...", "p": 5, "n": 1, "d": 7,
///     "variables": ["x", "y", "z"], "hyperplane_index": 2,
///     "weights": [1, 1, 1],                      (optional)
///     "terms": [ [[7, 0, 0], 1], [[6, 1, 0], 1], ... ] }
/// Coefficients are JSON integers, or decimal strings when large. Instead of
/// "terms" a document may give "equation": "x^3 + y^3 + z^3 + 2xyz"
/// (see parse_polynomial); serialisation always writes "terms".
nlohmann::json spec_to_json(const PairSpec& spec);
PairSpec spec_from_json(const nlohmann::json& j);

std::string serialize_spec(const PairSpec& spec);
PairSpec parse_spec(const std::string& text);
PairSpec load_spec(const std::string& path);

nlohmann::json int_to_json(const Int& x);
Int int_from_json(const nlohmann::json& j);
nlohmann::json poly_terms_to_json(const IntPoly& f);

}  // namespace cryslat
