#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cryslat/hodge/hodge.hpp"
#include "cryslat/variety/pair_spec.hpp"

namespace cryslat {

/// Integer polynomial in T, coefficients from T^0 upwards, no trailing zeros
/// (the zero polynomial is empty).
using ZPoly = std::vector<Int>;

ZPoly zpoly_trim(ZPoly a);
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
/// a / b; throws std::domain_error unless b divides a in Z[T].
ZPoly zpoly_divide_exact(const ZPoly& a, const ZPoly& b);
/// P(c·T).
ZPoly zpoly_scale_variable(const ZPoly& a, const Int& c);
std::string zpoly_str(const ZPoly& a, const std::string& var = "T");

struct CountOptions {
  unsigned threads = 1;
  /// Largest number of points (projective classes, or cone points for
  /// weighted specs) one count may enumerate.
  Int budget = Int(50'000'000);
};

/// #X̄(F_{p^m}) by exhaustive enumeration; weighted specs count the nonzero
/// affine-cone solutions and divide by p^m − 1. Throws BudgetExceeded.
Int count_points(const PairSpec& spec, int m, const CountOptions& opt = {});

struct CountVector {
  long q = 0;
  std::vector<Int> counts;  // counts[m-1] = #X̄(F_{q^m})
};

CountVector count_vector(const PairSpec& spec, int M, const CountOptions& opt = {});

/// Genus of a smooth plane curve of degree d.
long plane_curve_genus(int d);

struct ZetaNumerator {
  ZPoly coeffs;  // P_1(T) = Σ a_i T^i, a_0 = 1
  long q = 0;
  long genus = 0;
  std::string str() const { return zpoly_str(coeffs); }
};

/// Recovers P_1 of a genus-g curve from #C(F_{q^m}), m = 1..g (further
/// counts are ignored) via Newton–Girard and the functional equation.
/// Throws std::domain_error when a coefficient is not an integer.
ZetaNumerator curve_zeta_numerator(const CountVector& counts, long genus);

/// Z(T) = P(T)^{(-1)^{n+1}} / ((1−T)(1−qT)…(1−q^nT)).
struct ZetaFunction {
  int n = 0;
  long q = 0;
  ZPoly numerator;  // P (primitive middle cohomology)
  int numerator_exponent = 1;

  /// #X̄(F_{q^m}) for m = 1..M from the logarithmic derivative.
  std::vector<Int> counts(int M) const;
  std::string str() const;
};

ZetaFunction assemble_zeta(const ZPoly& P, int n, long q);

/// Power sums Σ α^m, m = 1..M, of the reciprocal roots of P = Π(1 − αT).
std::vector<Int> power_sums(const ZPoly& P, int M);

/// q^g·T^{2g}·P(1/(qT)) == P(T).
bool satisfies_functional_equation(const ZPoly& P, long q, long genus);
/// a_1² <= 4 g² q, i.e. |a_1| <= 2g√q.
bool satisfies_weil_bound(const ZPoly& P, long q, long genus);

/// P / P_D_twisted on H(X̄)_prim; throws std::domain_error on inexact division.
ZPoly split_charpoly(const ZPoly& P, const ZPoly& P_D_twisted);

struct PointCharPoly {
  std::vector<int> factor_degrees;  // over F_p, with multiplicity one each
  ZPoly full;                       // det(1 − FT | H^0(D))
  ZPoly primitive;                  // full / (1 − T)
  ZPoly twisted;                    // primitive(qT)
};

/// Frobenius on H^0 of a reduced zero-dimensional D = V(F) ⊂ P^1 (F a binary
/// form); q = p. Throws SpecError on repeated factors.
PointCharPoly points_charpoly_on_D(const PairSpec& D);

/// Lower convex hull of (i, ord_p a_i); requires P(0) = 1.
HodgePolygon newton_polygon(const ZPoly& P, long p);

struct PolygonComparison {
  bool above = true;
  std::optional<long> first_failure;  // abscissa
  Rat newton_height = 0;
  Rat hodge_height = 0;
};

/// NP(i) >= Γ(i) for every integer i in the common range.
PolygonComparison check_newton_above_hodge(const HodgePolygon& newton, const HodgePolygon& hodge);

}  // namespace cryslat
