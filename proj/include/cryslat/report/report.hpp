#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "cryslat/golden/golden.hpp"
#include "cryslat/logdr/lattice.hpp"
#include "cryslat/precision/harness.hpp"
#include "cryslat/precision/plan.hpp"
#include "cryslat/zeta/zeta.hpp"

namespace cryslat {

/// Precision plan for a pair; q defaults to p. A k override is validated
/// against the pole-order bound.
PrecisionPlan plan_for_spec(const PairSpec& spec, std::optional<long> k = std::nullopt, std::optional<long> q = std::nullopt);

/// Zeta-oracle run on one pair.
struct ZetaRun {
  CountVector counts;
  std::optional<ZetaNumerator> numerator;      // curves with enough counts
  std::vector<Int> regenerated;                // counts from the assembled zeta
  bool counts_match = true;
  bool functional_equation = true;
  bool weil_bound = true;
  std::optional<HodgePolygon> newton;
  HodgePolygon hodge;                          // primitive Hodge polygon of X̄
  PolygonComparison newton_vs_hodge;
  std::optional<PointCharPoly> section;        // D for curves
  std::optional<bool> weil_interval_m1;        // |N_1 − Σ q^j| <= b_prim q^{n/2} (n >= 2)
  std::vector<std::string> notes;

  bool ok() const;
};

ZetaRun run_zeta(const PairSpec& spec, int M, const CountOptions& opt = {});

// JSON documents. Every document carries {"tool", "version", "command"} and
// an echo of its inputs; no timings, so output is deterministic.
nlohmann::json rational_to_json(const Rat& r);
nlohmann::json hodge_to_json(const HodgeVector& h);
nlohmann::json polygon_to_json(const HodgePolygon& g);
nlohmann::json form_to_json(const LatticeForm& f, const std::vector<std::string>& vars);
std::string form_to_string(const LatticeForm& f, const std::vector<std::string>& vars);

nlohmann::json lattice_report(const PairSpec& spec, const LatticeBasis& B);
nlohmann::json precision_report(const PairSpec& spec, const PrecisionPlan& plan);
nlohmann::json zeta_report(const PairSpec& spec, int M, const ZetaRun& run);
nlohmann::json golden_report(const std::vector<GoldenResult>& results);
nlohmann::json loss_report(const LossReport& rep);

std::string render(const nlohmann::json& doc);

}  // namespace cryslat
