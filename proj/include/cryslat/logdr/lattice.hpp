#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cryslat/hodge/hodge.hpp"
#include "cryslat/logdr/invariant.hpp"

namespace cryslat {

/// A Z_(p)-combination of ω-model monomials: Σ c · m · ω.
struct LatticeForm {
  std::vector<std::pair<Exponent, Rat>> terms;
  bool operator==(const LatticeForm&) const = default;
};

/// Elimination state behind a basis: the ω-model coordinates and the
/// saturated span of relations and exact forms. Needed by reduce_form.
struct LatticeEngine {
  AffineChart chart;
  std::optional<CharacterContext> characters;
  OmegaSpace space;
  SaturatedEchelon echelon{0, 2};
  std::vector<uint32_t> basis_columns;
  size_t relation_rows = 0;
  size_t exact_rows = 0;
};

/// Basis of the lattice H(X̄, kD) in the ω-model.
struct LatticeBasis {
  long p = 2;
  int n = 1;
  int d = 1;
  long k = 0;
  long minimal_k = 0;
  long torsion_exponent = 0;
  std::vector<std::string> variables;  // affine chart variables
  std::optional<std::vector<int>> weights;
  size_t hyperplane_index = 0;
  std::vector<LatticeForm> forms;
  long expected_rank = -1;             // from the Hodge-number oracle (-1: not checked)
  std::shared_ptr<const LatticeEngine> engine;  // absent after deserialisation

  size_t rank() const { return forms.size(); }
};

/// The lattice rank disagrees with the Hodge-number prediction.
class RankMismatch : public std::runtime_error {
 public:
  RankMismatch(long computed, long expected)
      : std::runtime_error("lattice rank " + std::to_string(computed) + " differs from the Hodge-number prediction " +
                           std::to_string(expected) + " (non-smooth input or model failure)"),
        computed_(computed),
        expected_(expected) {}
  long computed() const { return computed_; }
  long expected() const { return expected_; }

 private:
  long computed_, expected_;
};

struct LatticeOptions {
  unsigned threads = 1;
  bool check_rank = true;
};

/// Primitive Hodge numbers of X̄ and D (invariant parts when weighted) and
/// the resulting pair vector.
struct PairHodge {
  HodgeVector x;
  HodgeVector d;
  HodgeVector pair;
};
PairHodge predicted_hodge(const PairSpec& spec);

/// Rank predicted by primitive Hodge numbers: h^n_prim(X̄) + h^{n-1}_prim(D),
/// invariant parts when the spec is weighted.
long predicted_lattice_rank(const PairSpec& spec);
HodgeVector predicted_pair_hodge(const PairSpec& spec);

/// Basis of H(X̄, kD) for an unweighted spec (k defaults to the minimal bound).
LatticeBasis lattice_basis(const PairSpec& spec, std::optional<long> k = std::nullopt, const LatticeOptions& opt = {});

/// G-invariant basis for a weighted spec, computed on its smooth cover. With
/// trivial weights this is lattice_basis.
LatticeBasis invariant_lattice_basis(const PairSpec& spec, std::optional<long> k = std::nullopt, const LatticeOptions& opt = {});

struct ReducedForm {
  std::vector<Rat> coords;    // coordinates in the basis
  long torsion_exponent = 0;  // least e with p^e·form in the saturated lattice
};

/// Coordinates of an ω-model form in the basis, modulo the saturated span of
/// relations and exact forms. Throws std::out_of_range on degree overflow (or
/// a non-invariant monomial for invariant bases), std::logic_error without an
/// engine.
ReducedForm reduce_form(const LatticeBasis& basis, const IntPoly& omega_coefficient);
ReducedForm reduce_form(const LatticeBasis& basis, const LatticeForm& form);

/// The transition data: coordinates of every raw ω-model generator.
std::vector<ReducedForm> raw_generator_coordinates(const LatticeBasis& basis);

}  // namespace cryslat
