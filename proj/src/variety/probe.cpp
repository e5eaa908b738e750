#include "cryslat/variety/probe.hpp"

#include <mutex>

#include "cryslat/variety/points.hpp"

namespace cryslat {

ProbeReport smoothness_probe(const PairSpec& spec_in, int max_extension, unsigned threads, long budget) {
  if (max_extension < 1) throw std::invalid_argument("smoothness_probe: extension bound must be >= 1");
  const PairSpec spec = cover(spec_in);
  ProbeReport rep;
  rep.target = spec_in.weighted() ? "cover" : "X";
  rep.max_extension = max_extension;
  std::vector<IntPoly> system{spec.Q};
  for (size_t i = 0; i < spec.nvars(); ++i) system.push_back(spec.Q.derivative(i));

  for (int m = 1; m <= max_extension; ++m) {
    auto F = ExtField::make(spec.p, m);
    const Int total = projective_point_count(spec.nvars(), F->order());
    if (total + rep.points_checked > budget) throw BudgetExceeded("smoothness_probe: point budget exceeded at m = " + std::to_string(m));
    std::vector<CompiledPoly> comp;
    int max_e = 0;
    for (const auto& f : system) {
      comp.emplace_back(f, *F);
      max_e = std::max(max_e, comp.back().max_exponent());
    }
    const size_t chunks = projective_chunks(spec.nvars(), F->order());
    std::vector<std::optional<std::vector<long>>> found(chunks);
    for_each_projective_point(spec.nvars(), *F, threads, [&](size_t c, const std::vector<long>& pt) {
      thread_local std::vector<std::vector<long>> pows;
      power_table(*F, pt, max_e, pows);
      for (const auto& f : comp)
        if (f.eval(pows) != 0) return false;
      found[c] = pt;
      return true;
    });
    rep.points_checked += total;
    for (const auto& w : found)
      if (w) {
        rep.witness = SingularWitness{m, *w, F->modulus().c};
        return rep;
      }
  }
  return rep;
}

std::vector<ProbeReport> probe_pair(const PairSpec& spec, int max_extension, unsigned threads, long budget) {
  std::vector<ProbeReport> out;
  out.push_back(smoothness_probe(spec, max_extension, threads, budget));
  const PairSpec c = cover(spec);
  PairSpec D = hyperplane_section(c);
  auto r = smoothness_probe(D, max_extension, threads, budget);
  r.target = spec.weighted() ? "cover section" : "D";
  out.push_back(r);
  return out;
}

}  // namespace cryslat
