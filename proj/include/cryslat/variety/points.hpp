#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cryslat/arith/ext_field.hpp"
#include "cryslat/arith/sparse_poly.hpp"

namespace cryslat {

/// Raised when an enumeration would exceed the configured point budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial prepared for repeated evaluation over one finite field.
class CompiledPoly {
 public:
  CompiledPoly(const IntPoly& f, const ExtField& F);
  int max_exponent() const { return max_exp_; }
  /// `pows[i][e]` must hold x_i^e for e <= max_exponent().
  long eval(const std::vector<std::vector<long>>& pows) const;

 private:
  const ExtField* F_;
  std::vector<Exponent> exps_;
  std::vector<long> coeffs_;
  int max_exp_ = 0;
};

/// Fills pows[i][e] = x_i^e for e <= max_e.
void power_table(const ExtField& F, const std::vector<long>& x, int max_e, std::vector<std::vector<long>>& pows);

/// Number of normalised projective points in P^{nvars-1}(F_q).
Int projective_point_count(size_t nvars, long q);

/// Visits the points of P^{nvars-1}(F_q), each once, with the first nonzero
/// coordinate equal to 1. The order is: more leading zeros first, then the
/// remaining coordinates lexicographically. Work is split into ordered
/// chunks; `visit(chunk, point)` returns true to stop that chunk early.
/// Chunks may run concurrently on `threads` workers.
size_t projective_chunks(size_t nvars, long q);
void for_each_projective_point(size_t nvars, const ExtField& F, unsigned threads,
                               const std::function<bool(size_t chunk, const std::vector<long>& pt)>& visit);

/// Visits all nonzero points of the affine cone F_q^{nvars} \ {0}, chunked by
/// the first coordinate.
void for_each_cone_point(size_t nvars, const ExtField& F, unsigned threads,
                         const std::function<void(size_t chunk, const std::vector<long>& pt)>& visit);

}  // namespace cryslat
