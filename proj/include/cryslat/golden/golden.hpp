#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cryslat/logdr/lattice.hpp"

namespace cryslat {

/// A reference basis to compare against: the pair, the chosen twist k and the
/// listed forms, produced as ω-model coefficients on the chart the lattice
/// is computed on (the cover chart for weighted pairs).
struct GoldenCase {
  std::string name;
  PairSpec spec;
  long k = 0;
  long expected_minimal_k = 0;
  long expected_rank = 0;
  std::function<std::vector<IntPoly>(const AffineChart&)> forms;
};

/// The degree-7 plane curve over F_5 with k = 12 and the 36 forms x^i y^j dy.
GoldenCase curve_golden_case();
/// The elliptic surface y² = x³ + a(t)x + b(t) over F_11 in P(6,9,1,1) with
/// k = 53 and the 34 forms x^a t^c dx∧dt / y.
GoldenCase surface_golden_case();

struct GoldenResult {
  std::string name;
  long minimal_k = 0;
  long k = 0;
  long rank = 0;
  long expected_rank = 0;
  long listed_forms = 0;
  /// Largest torsion exponent of a listed form (0: every form lies in the lattice).
  long max_form_torsion = 0;
  /// ord_p of the change-of-basis determinant; -1 when the listed forms are
  /// linearly dependent modulo the lattice relations.
  long determinant_valuation = -1;
  double seconds = 0;

  bool same_lattice() const {
    return rank == expected_rank && listed_forms == rank && max_form_torsion == 0 && determinant_valuation == 0;
  }
  std::string summary() const;
};

GoldenResult verify_golden(const GoldenCase& c, unsigned threads = 1);

/// Exact ord_p(det M) for a square rational matrix; -1 when det M = 0.
long determinant_valuation(const std::vector<std::vector<Rat>>& M, long p);

}  // namespace cryslat
