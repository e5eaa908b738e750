#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cryslat/hodge/hodge.hpp"

namespace cryslat {

/// Block structure of a Frobenius matrix adapted to the Hodge filtration of a pair.
///
/// Rows and columns are split into an X-part (size Σ x_blocks) followed by a
/// D-part (size Σ d_blocks). X-columns of block q carry valuation q
/// (q = 0..n, width x_blocks[q] = h^{n-q,q}_X); D-columns of block j carry
/// valuation j+1 (j = 0..n-1, width d_blocks[j] = h^{n-1-j,j}_D). X-rows see
/// those column valuations on X-columns and 0 on D-columns; D-rows are zero on
/// X-columns and see the column valuations on D-columns.
struct HodgeBlockShape {
  int n = 1;
  std::vector<long> x_blocks;
  std::vector<long> d_blocks;

  static HodgeBlockShape make(std::vector<long> x_blocks, std::vector<long> d_blocks);
  long x_size() const;
  long d_size() const;
  long size() const { return x_size() + d_size(); }
  /// Floor valuation v_ij of entry (i, j); `N` stands in for the zero block.
  long floor_valuation(long i, long j, long N) const;
  /// Lower convex hull with slope s repeated (number of columns of valuation s) times.
  HodgePolygon polygon() const;
  std::string str() const;
};

enum class PerturbationMode {
  Uniform,   // Ã = A + p^N·E
  Relative,  // Ã = A + p^N·(p^{v_ij}·E_ij)
  Zero,      // Ã = A
};

std::string to_string(PerturbationMode m);
PerturbationMode perturbation_mode_from_string(const std::string& s);

struct LossViolation {
  long trial = 0;
  long coefficient = 0;
  long observed = 0;  // ord_p(a_l − ã_l)
  long required = 0;  // N + ⌈Γ(l)⌉
};

struct LossReport {
  HodgeBlockShape shape;
  long p = 2;
  long N = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  PerturbationMode mode = PerturbationMode::Uniform;
  long checks = 0;
  long violations = 0;
  /// Per coefficient l = 0..size: minimum over trials of ord_p(a_l − ã_l) − (N + ⌈Γ(l)⌉);
  /// empty when every trial reproduced a_l exactly.
  std::vector<std::optional<long>> min_slack;
  std::vector<LossViolation> first_violations;  // at most a handful, for diagnostics
};

/// Samples `trials` integer matrices A with the block valuation pattern of
/// `shape` (each entry attains its floor with probability 1/2), perturbs them
/// according to `mode`, and compares the coefficients of det(1 − AT) and
/// det(1 − ÃT) exactly. Results are independent of `threads`.
LossReport loss_harness(const HodgeBlockShape& shape, long N, long p, long trials, std::uint64_t seed, PerturbationMode mode,
                        unsigned threads = 1);

}  // namespace cryslat
