#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cryslat/logdr/forms.hpp"
#include "cryslat/report/report.hpp"
#include "cryslat/variety/points.hpp"
#include "cryslat/variety/probe.hpp"
#include "cryslat/variety/spec_io.hpp"

using namespace cryslat;
using nlohmann::json;

namespace {

// Exit codes: 0 success, 1 a check failed, 2 invalid input, 3 budget exceeded, 4 internal error.
constexpr int kCheckFailed = 1;
constexpr int kInvalidInput = 2;
constexpr int kBudget = 3;
constexpr int kInternal = 4;

struct Options {
  std::string spec;
  std::optional<long> k;
  std::optional<long> q;
  int max_ext = 2;
  int M = 2;
  long trials = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  long budget = 50'000'000;
  std::string out;
  std::string shape = "1,1|1";
  long N = 0;
  long p = 5;
  std::string mode = "uniform";
};

void emit(const Options& o, const json& doc) {
  const std::string text = render(doc);
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

int fail(const std::string& invariant, const std::string& message, int code) {
  json e;
  e["error"] = {{"invariant", invariant}, {"message", message}};
  std::cerr << e.dump(2) << "\n";
  return code;
}

std::vector<long> parse_widths(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" ") == std::string::npos) continue;
    out.push_back(std::stol(item));
  }
  return out;
}

HodgeBlockShape parse_shape(const std::string& s) {
  const auto bar = s.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("shape must look like 'h0,h1,...|d0,...' (e.g. 1,1|1)");
  return HodgeBlockShape::make(parse_widths(s.substr(0, bar)), parse_widths(s.substr(bar + 1)));
}

int cmd_lattice_basis(const Options& o) {
  const PairSpec spec = load_spec(o.spec);
  LatticeOptions lo;
  lo.threads = o.threads;
  lo.check_rank = false;
  const LatticeBasis B = invariant_lattice_basis(spec, o.k, lo);
  const json doc = lattice_report(spec, B);
  emit(o, doc);
  if (!doc["rank_matches"].get<bool>())
    return fail("rank-identity", RankMismatch(static_cast<long>(B.rank()), predicted_lattice_rank(spec)).what(), kCheckFailed);
  return 0;
}

int cmd_precision_plan(const Options& o) {
  const PairSpec spec = load_spec(o.spec);
  const json doc = precision_report(spec, plan_for_spec(spec, o.k, o.q));
  emit(o, doc);
  if (!doc["self_consistent"].get<bool>()) return fail("precision-self-consistency", "error bound at N_F misses some N_i", kCheckFailed);
  return 0;
}

int cmd_zeta(const Options& o) {
  const PairSpec spec = load_spec(o.spec);
  CountOptions co;
  co.threads = o.threads;
  co.budget = o.budget;
  const ZetaRun run = run_zeta(spec, o.M, co);
  emit(o, zeta_report(spec, o.M, run));
  if (!run.ok()) return fail("zeta-consistency", "a zeta-oracle check failed; see the report", kCheckFailed);
  return 0;
}

int cmd_probe(const Options& o) {
  const PairSpec spec = load_spec(o.spec);
  json doc;
  doc["tool"] = "cryslat";
  doc["version"] = CRYSLAT_VERSION;
  doc["command"] = "probe";
  doc["input"] = spec_to_json(spec);
  bool clean = true;
  json arr = json::array();
  for (const auto& r : probe_pair(spec, o.max_ext, o.threads, o.budget)) {
    json e = {{"target", r.target}, {"max_extension", r.max_extension}, {"points_checked", int_to_json(r.points_checked)}};
    if (r.witness) {
      clean = false;
      e["singular_point"] = {{"m", r.witness->m}, {"coordinates", r.witness->point}, {"field_modulus", r.witness->field_modulus}};
    } else {
      e["caveat"] = ProbeReport::caveat;
    }
    arr.push_back(e);
  }
  doc["probes"] = arr;
  emit(o, doc);
  if (!clean) return fail("smoothness", "singular point found", kCheckFailed);
  return 0;
}

int cmd_verify_examples(const Options& o) {
  std::vector<GoldenResult> results{verify_golden(curve_golden_case(), o.threads), verify_golden(surface_golden_case(), o.threads)};
  const json doc = golden_report(results);
  emit(o, doc);
  for (const auto& r : results) std::cerr << r.summary() << "\n";
  if (!doc["pass"].get<bool>()) return fail("golden-lattice", "a listed basis does not span the computed lattice", kCheckFailed);
  return 0;
}

int cmd_loss_harness(const Options& o) {
  const HodgeBlockShape shape = parse_shape(o.shape);
  const long N = o.N > 0 ? o.N : 2 * (shape.n + 1);
  const LossReport rep = loss_harness(shape, N, o.p, o.trials, o.seed, perturbation_mode_from_string(o.mode), o.threads);
  emit(o, loss_report(rep));
  if (rep.violations > 0)
    return fail("loss-bound", std::to_string(rep.violations) + " coefficient(s) violate ord_p(a_l - ã_l) >= N + Γ(l)", kCheckFailed);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cryslat: integral lattices in log de Rham cohomology of hypersurface pairs, with precision planning and a "
               "point-counting oracle"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--threads", o.threads, "Worker threads (results do not depend on this)")->check(CLI::Range(1u, 1024u));
  app.add_option("--out", o.out, "Write the report to FILE instead of stdout");

  auto* lb = app.add_subcommand("lattice-basis", "Basis of H(X, kD) for a spec");
  lb->add_option("--spec", o.spec, "Spec JSON file")->required()->check(CLI::ExistingFile);
  lb->add_option("--k", o.k, "Twist k (default: minimal admissible)");

  auto* pp = app.add_subcommand("precision-plan", "Hodge data, coefficient precisions and N_F");
  pp->add_option("--spec", o.spec, "Spec JSON file")->required()->check(CLI::ExistingFile);
  pp->add_option("--k", o.k, "Twist k (default: minimal admissible)");
  pp->add_option("--q", o.q, "Field size q (power of p; default p)");

  auto* ze = app.add_subcommand("zeta", "Point counts and zeta data by enumeration");
  ze->add_option("--spec", o.spec, "Spec JSON file")->required()->check(CLI::ExistingFile);
  ze->add_option("--max-ext,-M", o.M, "Count over F_{p^m} for m = 1..M")->check(CLI::Range(1, 12));
  ze->add_option("--budget", o.budget, "Maximum points enumerated per count");

  auto* pr = app.add_subcommand("probe", "Search for singular points of X and D");
  pr->add_option("--spec", o.spec, "Spec JSON file")->required()->check(CLI::ExistingFile);
  pr->add_option("--max-ext", o.max_ext, "Probe over F_{p^m} for m = 1..M")->check(CLI::Range(1, 12));
  pr->add_option("--budget", o.budget, "Maximum points enumerated per extension");

  auto* ve = app.add_subcommand("verify-examples", "Compare the reference example bases with the computed lattices");

  auto* lh = app.add_subcommand("loss-harness", "Property test of the characteristic-polynomial loss bound");
  lh->add_option("--shape", o.shape, "Block shape 'x_0,...,x_n|d_0,...,d_{n-1}'");
  lh->add_option("--N", o.N, "Precision N (default 2(n+1))");
  lh->add_option("--p", o.p, "Prime");
  lh->add_option("--trials", o.trials, "Number of random matrices")->check(CLI::PositiveNumber);
  lh->add_option("--seed", o.seed, "RNG seed");
  lh->add_option("--mode", o.mode, "uniform | relative | zero")->check(CLI::IsMember({"uniform", "relative", "zero"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInvalidInput;
  }

  try {
    if (*lb) return cmd_lattice_basis(o);
    if (*pp) return cmd_precision_plan(o);
    if (*ze) return cmd_zeta(o);
    if (*pr) return cmd_probe(o);
    if (*ve) return cmd_verify_examples(o);
    if (*lh) return cmd_loss_harness(o);
  } catch (const SpecError& e) {
    return fail(e.invariant(), e.what(), kInvalidInput);
  } catch (const BudgetExceeded& e) {
    return fail("budget", e.what(), kBudget);
  } catch (const RankMismatch& e) {
    return fail("rank-identity", e.what(), kCheckFailed);
  } catch (const std::invalid_argument& e) {
    return fail("invalid-argument", e.what(), kInvalidInput);
  } catch (const std::domain_error& e) {
    return fail("domain", e.what(), kCheckFailed);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kInternal);
  }
  return kInternal;
}
