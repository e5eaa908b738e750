#pragma once

#include <cstdint>
#include <vector>

#include "cryslat/arith/matrix.hpp"

namespace cryslat {

/// Sparse integer vector with strictly increasing column indices.
struct SparseRow {
  std::vector<uint32_t> col;
  std::vector<Int> val;

  size_t size() const { return col.size(); }
  bool empty() const { return col.empty(); }
  /// Entry at column c (0 if absent).
  Int at(uint32_t c) const;
  /// Builds a row from (column, value) pairs in any order; duplicates add up.
  static SparseRow from_pairs(std::vector<std::pair<uint32_t, Int>> pairs);
};

/// Result of row reduction over Z_(p) with minimal-valuation pivoting.
struct UnitPivotEchelon {
  ExactMatrix<LocalRational> form;       // transform * input; pivot rows first
  std::vector<size_t> pivot_columns;     // in pivot order; row i of `form` pivots here
  std::vector<long> pivot_valuations;    // ord_p of each pivot (pivot entry is exactly p^v)
  ExactMatrix<LocalRational> transform;  // invertible over Z_(p)
  long ledger = 0;                       // total valuation of the pivots
};

/// Row-reduces M using only Z_(p)-unimodular row operations. At each step the
/// pivot is an entry of minimal p-adic valuation among the remaining rows and
/// columns (ties: leftmost column, then topmost row); the pivot row is scaled
/// by a unit so the pivot equals p^v, and the entries below it are cleared.
/// The pivot valuations are the elementary divisors of M over Z_(p).
UnitPivotEchelon echelonize_unit_pivot(const ExactMatrix<LocalRational>& M);

/// Saturated sparse elimination over Z_(p).
///
/// Every row is kept primitive (its integer content divided out, including
/// any power of p), so the span of the pivot rows is the p-saturation of the
/// input span. Pivots are always p-adic units: the pivot is the unit entry in
/// the lowest-index column available, ties broken by the sparsest row, then
/// by input order. Hence Z_(p)^ncols = span(pivot rows) ⊕ span(e_j : j free).
class SaturatedEchelon {
 public:
  SaturatedEchelon(size_t ncols, long p);

  /// Eliminates the given rows. Row updates within one pivot step may be
  /// spread over `threads` workers; the result does not depend on it.
  void build(std::vector<SparseRow> rows, unsigned threads = 1);

  long prime() const { return p_; }
  size_t columns() const { return ncols_; }
  size_t rank() const { return pivot_cols_.size(); }
  const std::vector<uint32_t>& pivot_columns() const { return pivot_cols_; }
  const std::vector<SparseRow>& pivot_rows() const { return pivot_rows_; }
  std::vector<uint32_t> free_columns() const;
  bool is_pivot(uint32_t c) const { return pivot_of_col_.at(c) >= 0; }

  struct Reduction {
    std::vector<Rat> coords;  // coefficients at free_columns(), in order
    long torsion_exponent;    // least e >= 0 with p^e·coords integral at p
  };

  /// Expresses v/den modulo the saturated span in terms of the free unit
  /// vectors.
  Reduction reduce(const SparseRow& v, const Int& den = 1) const;

 private:
  size_t ncols_;
  long p_;
  std::vector<uint32_t> pivot_cols_;
  std::vector<SparseRow> pivot_rows_;
  std::vector<long> pivot_of_col_;
};

/// Divides a row by the gcd of its entries (making it primitive); returns
/// false for the zero row.
bool make_primitive(SparseRow& r);

/// a·x − b·y for sparse rows.
SparseRow combine(const Int& a, const SparseRow& x, const Int& b, const SparseRow& y);

/// Z_(p)-basis of the image of span(ambient) in Q_p^n / span(sub)·Q_p, i.e. of
/// span(ambient)/span(sub) modulo p-power torsion. Each returned vector is a
/// representative in ambient coordinates (a Z_(p)-combination of the ambient
/// generators). Entries must lie in Z_(p); all vectors must share arity.
std::vector<std::vector<Rat>> lattice_quotient_basis(const std::vector<std::vector<Rat>>& ambient_gens,
                                                     const std::vector<std::vector<Rat>>& sub_gens, long p);

}  // namespace cryslat
