#pragma once

#include <utility>
#include <vector>

#include "cryslat/arith/integer.hpp"

namespace cryslat {

/// Hodge numbers h^{i,n-i} for i = 0..n.
struct HodgeVector {
  int n = 0;
  std::vector<long> h;
  bool primitive = true;

  long total() const;
  bool operator==(const HodgeVector&) const = default;
};

/// Primitive Hodge numbers of a smooth degree-d hypersurface of dimension N:
/// h^{N-q,q} is the coefficient of t^{(q+1)d-(N+2)} in ((1-t^{d-1})/(1-t))^{N+2}.
HodgeVector primitive_hodge_numbers(int N, int d);

/// The same count restricted to the part invariant under
/// μ_{a_0} × … × μ_{a_{N+1}} acting on the coordinates: graded pieces of the
/// Jacobian ring of the Fermat hypersurface spanned by X^β with
/// β_i + 1 ≡ 0 (mod a_i). Requires every a_i to divide d.
HodgeVector invariant_primitive_hodge_numbers(int N, int d, const std::vector<int>& weights);

/// Pair numbers: entry 0 is h^{0,n}_X, entry i >= 1 is h^{i,n-i}_X + h^{i-1,n-i}_D.
HodgeVector pair_hodge_numbers(const HodgeVector& hx, const HodgeVector& hd);

/// Full middle Betti number: primitive total, plus one in even dimension
/// (the hyperplane class).
long full_middle_betti(int N, int d);

/// Lower convex hull of (Σ_{i<=j} h_i, Σ_{i<=j} i·h_i), j = -1..n.
struct HodgePolygon {
  std::vector<std::pair<long, long>> vertices;

  long total_rank() const { return vertices.empty() ? 0 : vertices.back().first; }
  /// Exact height at abscissa x in [0, total_rank].
  Rat height(long x) const;
  /// floor(height(x)) — the convention used wherever an integer bound is needed.
  long floor_height(long x) const;
  /// Slope of the segment containing (x-1, x].
  Rat slope_at(long x) const;
};

HodgePolygon hodge_polygon(const HodgeVector& pair);

/// Lower convex hull through the given points (sorted by abscissa, first at x = 0).
HodgePolygon lower_hull(std::vector<std::pair<long, Rat>> pts);

}  // namespace cryslat
