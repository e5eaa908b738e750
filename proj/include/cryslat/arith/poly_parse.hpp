#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cryslat/arith/sparse_poly.hpp"

namespace cryslat {

/// Parses an integer polynomial such as "x^7 + 3x^5*y^2 - 2 y + 1" over the
/// given variables. Terms are an optional integer coefficient followed by
/// factors `var` or `var^e`, optionally separated by '*'. An equation "a = b"
/// is read as a − b. Throws std::invalid_argument with the offending position.
IntPoly parse_polynomial(const std::string& text, const std::vector<std::string>& vars,
                         std::optional<std::vector<int>> weights = std::nullopt);

}  // namespace cryslat
