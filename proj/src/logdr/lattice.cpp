#include "cryslat/logdr/lattice.hpp"

#include "cryslat/precision/plan.hpp"

namespace cryslat {

namespace {

std::vector<std::vector<size_t>> index_subsets(size_t n, size_t k) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

LatticeBasis build(const PairSpec& original, const PairSpec& cov, long k, bool invariant, const LatticeOptions& opt) {
  if (cov.n < 1) throw SpecError("dimension", "the lattice construction needs n >= 1");
  const TwistBound tb = pole_bound_k(cov.n, cov.d, k);
  auto eng = std::make_shared<LatticeEngine>();
  eng->chart = dehomogenize(cov);
  const AffineChart& chart = eng->chart;
  const int n = cov.n;
  const size_t nv = chart.q.arity();
  const auto& vars = chart.q.variables();
  if (invariant) eng->characters.emplace(original.group_orders(), original.hyperplane_index, original.d);
  const CharacterContext* ctx = eng->characters ? &*eng->characters : nullptr;

  std::function<bool(const Exponent&)> keep;
  if (ctx) keep = [ctx](const Exponent& e) { return ctx->invariant_omega_monomial(e); };
  eng->space = OmegaSpace(nv, tb.chosen_k + cov.d - n - 1, keep);

  std::vector<SparseRow> rows;
  // Relations q̃·m·ω.
  const GroupCharacter qchar = ctx ? ctx->of_q() : GroupCharacter{};
  for (const auto& m : monomials_up_to(nv, tb.chosen_k - n - 1)) {
    if (ctx && !(ctx->of_monomial(m) + qchar + ctx->of_omega()).trivial()) continue;
    rows.push_back(eng->space.row(chart.q.times_monomial(m)));
  }
  eng->relation_rows = rows.size();
  // Exact forms d(h dx_J) and d(q̃ h' dx_J).
  for (const auto& J : index_subsets(nv, static_cast<size_t>(n - 1))) {
    GroupCharacter jchar = ctx ? ctx->zero() : GroupCharacter{};
    if (ctx)
      for (size_t j : J) jchar = jchar + ctx->of_dx(j);
    for (const auto& e : monomials_up_to(nv, tb.chosen_k - (n - 1))) {
      if (ctx && !(ctx->of_monomial(e) + jchar).trivial()) continue;
      IntPoly f = exterior_derivative_to_omega(chart, IntPoly::monomial(vars, e), J);
      if (!f.is_zero()) rows.push_back(eng->space.row(f));
    }
    for (const auto& e : monomials_up_to(nv, tb.chosen_k - (n - 1) - cov.d)) {
      if (ctx && !(ctx->of_monomial(e) + qchar + jchar).trivial()) continue;
      IntPoly f = exterior_derivative_to_omega(chart, chart.q.times_monomial(e), J);
      if (!f.is_zero()) rows.push_back(eng->space.row(f));
    }
  }
  eng->exact_rows = rows.size() - eng->relation_rows;

  eng->echelon = SaturatedEchelon(eng->space.size(), cov.p);
  eng->echelon.build(std::move(rows), opt.threads);
  eng->basis_columns = eng->echelon.free_columns();
  // Present the basis in ascending degree, lexicographically.
  std::sort(eng->basis_columns.begin(), eng->basis_columns.end(), [&](uint32_t a, uint32_t b) {
    const Exponent &ea = eng->space.monomial(a), &eb = eng->space.monomial(b);
    const long da = total_degree(ea), db = total_degree(eb);
    if (da != db) return da < db;
    return ea < eb;
  });

  LatticeBasis B;
  B.p = cov.p;
  B.n = n;
  B.d = cov.d;
  B.k = tb.chosen_k;
  B.minimal_k = tb.minimal_k;
  B.torsion_exponent = torsion_exponent(n, tb.chosen_k, cov.p);
  B.variables = vars;
  if (invariant) B.weights = original.weights;
  B.hyperplane_index = cov.hyperplane_index;
  for (uint32_t c : eng->basis_columns) B.forms.push_back(LatticeForm{{{eng->space.monomial(c), Rat(1)}}});
  B.engine = eng;
  if (opt.check_rank) {
    B.expected_rank = predicted_lattice_rank(original);
    if (static_cast<long>(B.rank()) != B.expected_rank) throw RankMismatch(static_cast<long>(B.rank()), B.expected_rank);
  }
  return B;
}

std::vector<int> section_weights(const PairSpec& spec) {
  std::vector<int> w = spec.group_orders();
  w.erase(w.begin() + static_cast<long>(spec.hyperplane_index));
  return w;
}

}  // namespace

PairHodge predicted_hodge(const PairSpec& spec) {
  if (spec.n < 1) throw SpecError("dimension", "pair Hodge numbers need n >= 1");
  PairHodge h;
  if (spec.weighted()) {
    h.x = invariant_primitive_hodge_numbers(spec.n, spec.d, spec.group_orders());
    h.d = invariant_primitive_hodge_numbers(spec.n - 1, spec.d, section_weights(spec));
  } else {
    h.x = primitive_hodge_numbers(spec.n, spec.d);
    h.d = primitive_hodge_numbers(spec.n - 1, spec.d);
  }
  h.pair = pair_hodge_numbers(h.x, h.d);
  return h;
}

HodgeVector predicted_pair_hodge(const PairSpec& spec) { return predicted_hodge(spec).pair; }

long predicted_lattice_rank(const PairSpec& spec) { return predicted_pair_hodge(spec).total(); }

LatticeBasis lattice_basis(const PairSpec& spec, std::optional<long> k, const LatticeOptions& opt) {
  if (spec.weighted()) throw SpecError("weights", "weighted specs go through invariant_lattice_basis");
  return build(spec, spec, k.value_or(pole_bound_k(spec.n, spec.d).minimal_k), false, opt);
}

LatticeBasis invariant_lattice_basis(const PairSpec& spec, std::optional<long> k, const LatticeOptions& opt) {
  if (!spec.weighted()) return lattice_basis(spec, k, opt);
  return build(spec, cover(spec), k.value_or(pole_bound_k(spec.n, spec.d).minimal_k), true, opt);
}

namespace {

const LatticeEngine& engine_of(const LatticeBasis& b) {
  if (!b.engine) throw std::logic_error("reduce_form: basis has no elimination data (deserialised basis?)");
  return *b.engine;
}

ReducedForm finish(const LatticeEngine& eng, const SaturatedEchelon::Reduction& red) {
  // red.coords follow the free columns in column order; map to basis order.
  const auto free = eng.echelon.free_columns();
  std::map<uint32_t, size_t> pos;
  for (size_t i = 0; i < free.size(); ++i) pos[free[i]] = i;
  ReducedForm out;
  out.torsion_exponent = red.torsion_exponent;
  for (uint32_t c : eng.basis_columns) out.coords.push_back(red.coords[pos.at(c)]);
  return out;
}

}  // namespace

ReducedForm reduce_form(const LatticeBasis& basis, const IntPoly& f) {
  const auto& eng = engine_of(basis);
  IntPoly g(eng.chart.q.variables());
  for (const auto& [e, c] : f.terms()) g.add_term(e, c);
  return finish(eng, eng.echelon.reduce(eng.space.row(g)));
}

ReducedForm reduce_form(const LatticeBasis& basis, const LatticeForm& form) {
  const auto& eng = engine_of(basis);
  Int l = 1;
  for (const auto& [e, c] : form.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly g(eng.chart.q.variables());
  for (const auto& [e, c] : form.terms) g.add_term(e, Int(c * l));
  return finish(eng, eng.echelon.reduce(eng.space.row(g), l));
}

std::vector<ReducedForm> raw_generator_coordinates(const LatticeBasis& basis) {
  const auto& eng = engine_of(basis);
  std::vector<ReducedForm> out;
  for (size_t c = 0; c < eng.space.size(); ++c) {
    SparseRow r;
    r.col.push_back(static_cast<uint32_t>(c));
    r.val.push_back(1);
    out.push_back(finish(eng, eng.echelon.reduce(r)));
  }
  return out;
}

}  // namespace cryslat
