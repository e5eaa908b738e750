#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cryslat/hodge/hodge.hpp"

namespace cryslat {

/// n·⌊log_p(k+1)⌋: the lattice H(X̄,kD) agrees with the log-crystalline
/// lattice up to torsion killed by p to this power.
long torsion_exponent(int n, long k, long p);

/// a + b·√q with integers a, b >= 0.
struct RootSum {
  Int a = 0;
  Int b = 0;
  std::string str(long q) const;
  bool operator==(const RootSum&) const = default;
};

/// Eigenvalue classes: `count` roots of absolute value q^{weight/2}.
struct WeightClass {
  long count = 0;
  int weight = 0;
};

struct CoefficientPrecision {
  long i = 0;
  RootSum bound;  // B_i: i-th elementary symmetric function of the absolute values
  long N = 0;     // least N with p^N > 2·B_i
};

/// Archimedean bounds B_i on the coefficients and the precision N_i needed to
/// recover each one from its residue mod p^{N_i}; exact in Z[√q].
std::vector<CoefficientPrecision> coefficient_precisions(const std::vector<WeightClass>& classes, long q, long p);

/// Least N >= 0 with p^N > 2·(a + b√q).
long precision_for_bound(const RootSum& B, long q, long p);

struct FrobeniusPrecision {
  long tau = 0;
  long max_rule = 0;     // max_i{N_i − ⌊Γ(i)⌋} + τ
  long floor_value = 0;  // n + τ + 1
  long value = 0;        // max(max_rule, floor_value)
  bool clamped = false;  // value was raised to the floor
  std::vector<long> per_coefficient;  // N_i − ⌊Γ(i)⌋
};

/// N_F = max_i{N_i − Γ(i)} + n⌊log_p(k+1)⌋, raised to n + n⌊log_p(k+1)⌋ + 1
/// when smaller. Γ is floored at integer abscissae.
FrobeniusPrecision required_frobenius_precision(const std::vector<long>& Ns, const HodgePolygon& polygon, int n, long k, long p);

/// N + ⌊Γ(i)⌋ − n⌊log_p(k+1)⌋; throws std::invalid_argument when N is below
/// n + n⌊log_p(k+1)⌋ + 1.
long coefficient_error_bound(long N, const HodgePolygon& polygon, long i, int n, long k, long p);

struct PrecisionPlan {
  long p = 2;
  long q = 2;
  int n = 1;
  long k = 0;
  long tau = 0;
  bool p_power_frobenius_only = false;  // q != p: bounds refer to the p-power Frobenius
  HodgeVector pair_hodge;
  HodgePolygon polygon;
  std::vector<WeightClass> weight_classes;
  std::vector<CoefficientPrecision> coefficients;
  std::vector<long> gamma;  // ⌊Γ(i)⌋
  FrobeniusPrecision frobenius;
};

/// Assembles a plan for a pair with the given pair/primitive Hodge data.
/// `hx_total` roots of weight n (from X̄) and `hd_total` of weight n+1 (from D).
PrecisionPlan make_precision_plan(const HodgeVector& pair, long hx_total, long hd_total, int n, long k, long p, long q);

}  // namespace cryslat
