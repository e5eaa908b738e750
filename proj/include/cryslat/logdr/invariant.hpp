#pragma once

#include <vector>

#include "cryslat/logdr/forms.hpp"

namespace cryslat {

/// A character of G = μ_{a_0} × … × μ_{a_{n+1}}, component i taken mod a_i.
struct GroupCharacter {
  std::vector<long> c;
  std::vector<int> orders;

  bool trivial() const;
  GroupCharacter operator+(const GroupCharacter& o) const;
  GroupCharacter operator-(const GroupCharacter& o) const;
  bool operator==(const GroupCharacter&) const = default;
};

/// Characters of affine forms on the chart x_ℓ = 1 of the smooth cover, where
/// G scales the projective coordinate X_i by μ_{a_i}. The affine variable
/// x_i = X_i/X_ℓ has character e_i - e_ℓ, dx_i likewise, q̃ = Q̃/X_ℓ^d has
/// -d·e_ℓ, and ω is fixed by ω ∧ dq̃ = dx_1 ∧ … ∧ dx_{n+1}.
class CharacterContext {
 public:
  CharacterContext(std::vector<int> orders, size_t hyperplane_index, int d);
  /// From a (possibly weighted) spec; trivial orders when unweighted.
  explicit CharacterContext(const PairSpec& spec);

  GroupCharacter zero() const;
  GroupCharacter of_monomial(const Exponent& affine_exponent) const;
  GroupCharacter of_dx(size_t affine_var) const;
  GroupCharacter of_q() const;
  GroupCharacter of_omega() const;
  GroupCharacter of(const FormGenerator& g) const;
  /// m·ω is invariant.
  bool invariant_omega_monomial(const Exponent& m) const;

 private:
  GroupCharacter reduce(std::vector<long> c) const;
  std::vector<int> orders_;
  size_t ell_;
  int d_;
};

/// Keeps exactly the generators with trivial character.
std::vector<FormGenerator> invariant_filter(const std::vector<FormGenerator>& gens, const CharacterContext& ctx);
std::vector<FormGenerator> invariant_filter(const std::vector<FormGenerator>& gens, const std::vector<int>& weights,
                                            size_t hyperplane_index, int d);

}  // namespace cryslat
