#include "cryslat/report/report.hpp"

#include "cryslat/logdr/forms.hpp"
#include "cryslat/variety/spec_io.hpp"

namespace cryslat {

using nlohmann::json;

namespace {

json header(const std::string& command) {
  json j;
  j["tool"] = "cryslat";
  j["version"] = CRYSLAT_VERSION;
  j["command"] = command;
  return j;
}

json zpoly_to_json(const ZPoly& P) {
  json a = json::array();
  for (const auto& c : P) a.push_back(int_to_json(c));
  return a;
}

json ints_to_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(int_to_json(c));
  return a;
}

}  // namespace

PrecisionPlan plan_for_spec(const PairSpec& spec, std::optional<long> k, std::optional<long> q) {
  const TwistBound tb = pole_bound_k(spec.n, spec.d, k);
  const PairHodge h = predicted_hodge(spec);
  return make_precision_plan(h.pair, h.x.total(), h.d.total(), spec.n, tb.chosen_k, spec.p, q.value_or(spec.p));
}

bool ZetaRun::ok() const {
  return counts_match && functional_equation && weil_bound && newton_vs_hodge.above && weil_interval_m1.value_or(true);
}

ZetaRun run_zeta(const PairSpec& spec, int M, const CountOptions& opt) {
  if (M < 1) throw std::invalid_argument("run_zeta: M must be positive");
  ZetaRun r;
  r.counts = count_vector(spec, M, opt);
  const PairHodge h = predicted_hodge(spec);
  r.hodge = hodge_polygon(h.x);
  const long q = spec.p;
  if (spec.n == 1 && !spec.weighted()) {
    const long g = plane_curve_genus(spec.d);
    if (M >= g) {
      r.numerator = curve_zeta_numerator(r.counts, g);
      const ZPoly& P = r.numerator->coeffs;
      r.regenerated = assemble_zeta(P, 1, q).counts(M);
      r.counts_match = r.regenerated == r.counts.counts;
      r.functional_equation = satisfies_functional_equation(P, q, g);
      r.weil_bound = satisfies_weil_bound(P, q, g);
      r.newton = newton_polygon(P, spec.p);
      r.newton_vs_hodge = check_newton_above_hodge(*r.newton, r.hodge);
    } else {
      r.notes.push_back("M = " + std::to_string(M) + " is below the genus " + std::to_string(g) +
                        "; numerator not recovered");
    }
    r.section = points_charpoly_on_D(hyperplane_section(spec));
  } else {
    // |N_1 − Σ_j q^j| <= b·q^{n/2}, b the primitive middle Betti number:
    // squared when n is odd.
    Int main = 0;
    for (int j = 0; j <= spec.n; ++j) main += ipow(q, static_cast<unsigned long>(j));
    const Int dev = abs(r.counts.counts[0] - main);
    const Int b = h.x.total();
    if (spec.n % 2 == 0) {
      r.weil_interval_m1 = dev <= b * ipow(q, static_cast<unsigned long>(spec.n / 2));
    } else {
      r.weil_interval_m1 = dev * dev <= b * b * ipow(q, static_cast<unsigned long>(spec.n));
    }
    r.notes.push_back("zeta recovery from counts is only implemented for plane curves; #X(F_p) checked against the Weil interval");
  }
  return r;
}

json rational_to_json(const Rat& r) {
  if (r.get_den() == 1) return int_to_json(r.get_num());
  return r.get_str();
}

json hodge_to_json(const HodgeVector& h) {
  json j;
  j["n"] = h.n;
  j["h"] = h.h;
  j["total"] = h.total();
  return j;
}

json polygon_to_json(const HodgePolygon& g) {
  json v = json::array();
  for (const auto& [x, y] : g.vertices) v.push_back(json::array({x, y}));
  return v;
}

std::string form_to_string(const LatticeForm& f, const std::vector<std::string>& vars) {
  if (f.terms.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : f.terms) {
    Rat a = c;
    if (s.empty()) {
      if (a < 0) {
        s += "-";
        a = -a;
      }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (a != 1) s += a.get_str() + "*";
    s += mono.empty() ? "ω" : mono + "*ω";
  }
  return s;
}

json form_to_json(const LatticeForm& f, const std::vector<std::string>& vars) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms) terms.push_back(json::array({e, rational_to_json(c)}));
  json j;
  j["terms"] = terms;
  j["text"] = form_to_string(f, vars);
  return j;
}

json lattice_report(const PairSpec& spec, const LatticeBasis& B) {
  json j = header("lattice-basis");
  j["input"] = spec_to_json(spec);
  const PairHodge h = predicted_hodge(spec);
  j["k"] = B.k;
  j["minimal_k"] = B.minimal_k;
  j["torsion_exponent"] = B.torsion_exponent;
  j["chart"] = {{"variables", B.variables}, {"cover", spec.weighted()}, {"model", "coefficients of the Gelfand-Leray form ω"}};
  j["rank"] = B.rank();
  j["expected_rank"] = predicted_lattice_rank(spec);
  j["rank_matches"] = static_cast<long>(B.rank()) == predicted_lattice_rank(spec);
  j["hodge"] = {{"X_primitive", hodge_to_json(h.x)}, {"D_primitive", hodge_to_json(h.d)}, {"pair", hodge_to_json(h.pair)}};
  j["hodge_polygon"] = polygon_to_json(hodge_polygon(h.pair));
  json forms = json::array();
  for (const auto& f : B.forms) forms.push_back(form_to_json(f, B.variables));
  j["basis"] = forms;
  if (B.engine) {
    j["elimination"] = {{"columns", B.engine->space.size()},
                        {"relation_rows", B.engine->relation_rows},
                        {"exact_rows", B.engine->exact_rows},
                        {"saturated_rank", B.engine->echelon.rank()}};
  }
  return j;
}

json precision_report(const PairSpec& spec, const PrecisionPlan& plan) {
  json j = header("precision-plan");
  j["input"] = spec_to_json(spec);
  j["p"] = plan.p;
  j["q"] = plan.q;
  j["p_power_frobenius_only"] = plan.p_power_frobenius_only;
  j["k"] = plan.k;
  j["tau"] = plan.tau;
  j["pair_hodge"] = hodge_to_json(plan.pair_hodge);
  j["hodge_polygon"] = polygon_to_json(plan.polygon);
  json wc = json::array();
  for (const auto& c : plan.weight_classes) wc.push_back({{"count", c.count}, {"weight", c.weight}});
  j["weight_classes"] = wc;
  json co = json::array();
  for (size_t i = 0; i < plan.coefficients.size(); ++i) {
    const auto& c = plan.coefficients[i];
    co.push_back({{"i", c.i},
                  {"B_i", {{"rational", int_to_json(c.bound.a)}, {"sqrt_q", int_to_json(c.bound.b)}}},
                  {"B_i_text", c.bound.str(plan.q)},
                  {"N_i", c.N},
                  {"gamma_floor", plan.gamma[i]},
                  {"N_i_minus_gamma", plan.frobenius.per_coefficient[i]}});
  }
  j["coefficients"] = co;
  j["frobenius_precision"] = {{"max_rule", plan.frobenius.max_rule},
                              {"floor", plan.frobenius.floor_value},
                              {"N_F", plan.frobenius.value},
                              {"clamped_to_floor", plan.frobenius.clamped}};
  // Self-consistency: the error bound at N_F meets every N_i.
  bool consistent = true;
  json audit = json::array();
  for (const auto& c : plan.coefficients) {
    const long bound = coefficient_error_bound(plan.frobenius.value, plan.polygon, c.i, plan.n, plan.k, plan.p);
    consistent = consistent && bound >= c.N;
    audit.push_back({{"i", c.i}, {"error_bound", bound}, {"N_i", c.N}});
  }
  j["audit"] = audit;
  j["self_consistent"] = consistent;
  return j;
}

json zeta_report(const PairSpec& spec, int M, const ZetaRun& run) {
  json j = header("zeta");
  j["input"] = spec_to_json(spec);
  j["M"] = M;
  j["q"] = run.counts.q;
  j["counts"] = ints_to_json(run.counts.counts);
  if (run.numerator) {
    j["numerator"] = {{"coefficients", zpoly_to_json(run.numerator->coeffs)},
                      {"text", run.numerator->str()},
                      {"genus", run.numerator->genus}};
    j["zeta"] = assemble_zeta(run.numerator->coeffs, spec.n, spec.p).str();
    j["regenerated_counts"] = ints_to_json(run.regenerated);
    j["newton_polygon"] = polygon_to_json(*run.newton);
  }
  j["hodge_polygon_X"] = polygon_to_json(run.hodge);
  j["checks"] = {{"counts_match", run.counts_match},
                 {"functional_equation", run.functional_equation},
                 {"weil_bound", run.weil_bound},
                 {"newton_above_hodge", run.newton_vs_hodge.above}};
  if (run.newton_vs_hodge.first_failure)
    j["checks"]["newton_first_failure"] = {{"i", *run.newton_vs_hodge.first_failure},
                                           {"newton", rational_to_json(run.newton_vs_hodge.newton_height)},
                                           {"hodge", rational_to_json(run.newton_vs_hodge.hodge_height)}};
  if (run.weil_interval_m1) j["checks"]["weil_interval_m1"] = *run.weil_interval_m1;
  if (run.section) {
    j["section"] = {{"factor_degrees", run.section->factor_degrees},
                    {"charpoly", zpoly_str(run.section->full)},
                    {"primitive", zpoly_str(run.section->primitive)},
                    {"twisted", zpoly_str(run.section->twisted)}};
  }
  j["notes"] = run.notes;
  j["ok"] = run.ok();
  return j;
}

json golden_report(const std::vector<GoldenResult>& results) {
  json j = header("verify-examples");
  json arr = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.same_lattice();
    arr.push_back({{"name", r.name},
                   {"minimal_k", r.minimal_k},
                   {"k", r.k},
                   {"rank", r.rank},
                   {"expected_rank", r.expected_rank},
                   {"listed_forms", r.listed_forms},
                   {"max_form_torsion", r.max_form_torsion},
                   {"determinant_valuation", r.determinant_valuation},
                   {"same_lattice", r.same_lattice()}});
  }
  j["examples"] = arr;
  j["pass"] = all;
  return j;
}

json loss_report(const LossReport& rep) {
  json j = header("loss-harness");
  j["shape"] = {{"n", rep.shape.n}, {"x_blocks", rep.shape.x_blocks}, {"d_blocks", rep.shape.d_blocks}, {"text", rep.shape.str()}};
  j["p"] = rep.p;
  j["N"] = rep.N;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["mode"] = to_string(rep.mode);
  j["checks"] = rep.checks;
  j["violations"] = rep.violations;
  json slack = json::array();
  for (const auto& s : rep.min_slack) slack.push_back(s ? json(*s) : json(nullptr));
  j["min_slack"] = slack;
  json fv = json::array();
  for (const auto& v : rep.first_violations)
    fv.push_back({{"trial", v.trial}, {"coefficient", v.coefficient}, {"observed", v.observed}, {"required", v.required}});
  j["first_violations"] = fv;
  return j;
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cryslat
