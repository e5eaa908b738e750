#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cryslat/variety/pair_spec.hpp"

namespace cryslat {

struct SingularWitness {
  int m = 1;                      // the point lies in P(F_{p^m})
  std::vector<long> point;        // coordinates as F_{p^m} indices (sum c_i p^i)
  std::vector<long> field_modulus;  // coefficients of the modulus of F_{p^m}, low degree first
};

struct ProbeReport {
  std::string target;  // "X" or "D" (cover when weighted)
  int max_extension = 0;
  std::optional<SingularWitness> witness;
  Int points_checked = 0;
  /// Absence of a witness up to F_{p^M} does not prove smoothness.
  static constexpr const char* caveat = "no singular point found up to the extension bound; this is not a proof of smoothness";
};

/// Searches P^{N}(F_{p^m}), m = 1..M, for a common zero of Q and all of its
/// partial derivatives; reports the first witness in enumeration order
/// (smallest m, then enumeration order). Weighted specs are probed on their
/// smooth cover.
ProbeReport smoothness_probe(const PairSpec& spec, int max_extension, unsigned threads = 1, long budget = 100000000);

/// Probes both X̄ and D.
std::vector<ProbeReport> probe_pair(const PairSpec& spec, int max_extension, unsigned threads = 1, long budget = 100000000);

}  // namespace cryslat
