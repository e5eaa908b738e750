#pragma once

#include <string>
#include <vector>

#include "cryslat/variety/spec_io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(CRYSLAT_DATA_DIR) + "/" + name + ".json"; }

inline cryslat::PairSpec load(const std::string& name) { return cryslat::load_spec(path(name)); }

/// Smooth unweighted pairs used for the rank identity and precision checks.
inline const std::vector<std::string>& rank_fixtures() {
  static const std::vector<std::string> names{"cubic_curve_p5",   "cubic_curve_p7",   "quartic_curve_p5",   "quartic_curve_p7",
                                              "quintic_curve_p5", "quintic_curve_p7", "cubic_surface_p5",  "quartic_surface_p5"};
  return names;
}

/// Every shipped pair.
inline std::vector<std::string> all_fixtures() {
  auto v = rank_fixtures();
  v.insert(v.end(), {"elliptic_p5", "curve7_p5", "surface_p11"});
  return v;
}

}  // namespace fixtures
