#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "cryslat/arith/echelon.hpp"
#include "cryslat/variety/pair_spec.hpp"

namespace cryslat {

/// Pole-order bound: k must exceed max{nd, (n+1)d-(n+2)}.
struct TwistBound {
  int n = 0;
  int d = 0;
  long minimal_k = 0;
  long chosen_k = 0;
};

/// Throws std::invalid_argument when `chosen` does not exceed the bound.
TwistBound pole_bound_k(int n, int d, std::optional<long> chosen = std::nullopt);

/// monomial · dx_I (I sorted, indices of affine variables) or monomial · ω,
/// where ω ∧ dq̃ = dx_1 ∧ … ∧ dx_{n+1}.
struct FormGenerator {
  Exponent monomial;
  bool omega = false;
  std::vector<size_t> subset;

  bool operator==(const FormGenerator&) const = default;
};

enum class FormModel {
  Ambient,  // monomial · dx_I with deg <= k - j
  Omega,    // monomial · ω with deg <= k + d - n - 1 (top degree only)
};

/// Sections of the twisted log j-forms. Default model: Ambient for j < n,
/// Omega for j = n.
std::vector<FormGenerator> section_generators(const AffineChart& chart, int j, long k,
                                              std::optional<FormModel> model = std::nullopt);

/// Coefficient of ω for a top-degree generator (dx_I with |I| = n maps to
/// (-1)^{n+1-c} ∂q̃/∂x_c · ω, c the 1-based index missing from I).
IntPoly to_omega(const AffineChart& chart, const FormGenerator& g);

/// Coefficient of ω of d(h · dx_J) for |J| = n-1.
IntPoly exterior_derivative_to_omega(const AffineChart& chart, const IntPoly& h, const std::vector<size_t>& J);

/// q̃ · m · ω for deg m <= k - n - 1.
std::vector<IntPoly> relation_subspace(const AffineChart& chart, long k);

/// d(h dx_J) for deg h <= k-(n-1), and d(q̃ h' dx_J) for deg h' <= k-(n-1)-d.
std::vector<IntPoly> exact_subspace(const AffineChart& chart, long k);

/// Monomial coordinates of the ω-model: exponents of degree <= bound, ordered
/// by degree descending, then lexicographically descending. Lower column
/// index means higher elimination priority, so bases come out in low degree.
class OmegaSpace {
 public:
  OmegaSpace() = default;
  OmegaSpace(size_t nvars, long bound, const std::function<bool(const Exponent&)>& keep = nullptr);

  size_t size() const { return monomials_.size(); }
  size_t arity() const { return nvars_; }
  long bound() const { return bound_; }
  const Exponent& monomial(size_t col) const { return monomials_.at(col); }
  std::optional<uint32_t> column(const Exponent& e) const;
  /// Sparse integer row of a polynomial; throws std::out_of_range if a
  /// monomial lies outside the space.
  SparseRow row(const IntPoly& f) const;

 private:
  size_t nvars_ = 0;
  long bound_ = -1;
  std::vector<Exponent> monomials_;
  std::map<Exponent, uint32_t> index_;
};

}  // namespace cryslat
