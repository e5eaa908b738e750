#include "cryslat/logdr/forms.hpp"

#include <algorithm>

namespace cryslat {

TwistBound pole_bound_k(int n, int d, std::optional<long> chosen) {
  if (n < 1 || d < 1) throw std::invalid_argument("pole_bound_k: need n >= 1 and d >= 1");
  TwistBound b;
  b.n = n;
  b.d = d;
  b.minimal_k = std::max<long>(static_cast<long>(n) * d, static_cast<long>(n + 1) * d - (n + 2)) + 1;
  b.chosen_k = chosen.value_or(b.minimal_k);
  if (b.chosen_k < b.minimal_k)
    throw std::invalid_argument("k below the pole-order bound: k = " + std::to_string(b.chosen_k) + " must exceed " +
                                std::to_string(b.minimal_k - 1));
  return b;
}

namespace {

int affine_dim(const AffineChart& chart) { return static_cast<int>(chart.q.arity()) - 1; }

void subsets_of_size(size_t n, size_t k, size_t start, std::vector<size_t>& cur, std::vector<std::vector<size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_of_size(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  subsets_of_size(n, k, 0, cur, out);
  return out;
}

}  // namespace

std::vector<FormGenerator> section_generators(const AffineChart& chart, int j, long k, std::optional<FormModel> model) {
  const int n = affine_dim(chart);
  if (j < 0 || j > n) throw std::invalid_argument("section_generators: need 0 <= j <= n");
  const FormModel m = model.value_or(j == n ? FormModel::Omega : FormModel::Ambient);
  if (m == FormModel::Omega && j != n) throw std::invalid_argument("section_generators: the ω-model is for top-degree forms only");
  const size_t nv = chart.q.arity();
  std::vector<FormGenerator> out;
  if (m == FormModel::Omega) {
    for (auto& e : monomials_up_to(nv, k + chart.d - n - 1)) out.push_back({std::move(e), true, {}});
    return out;
  }
  const auto mons = monomials_up_to(nv, k - j);
  for (const auto& I : subsets(nv, static_cast<size_t>(j)))
    for (const auto& e : mons) out.push_back({e, false, I});
  return out;
}

IntPoly to_omega(const AffineChart& chart, const FormGenerator& g) {
  const size_t nv = chart.q.arity();
  const int n = affine_dim(chart);
  const auto& vars = chart.q.variables();
  if (g.omega) return IntPoly::monomial(vars, g.monomial);
  if (g.subset.size() != static_cast<size_t>(n)) throw std::invalid_argument("to_omega: generator is not a top-degree form");
  size_t c = 0;
  while (c < g.subset.size() && g.subset[c] == c) ++c;  // first index missing from I
  if (c >= nv) throw std::logic_error("to_omega: malformed subset");
  const int sign = ((n - static_cast<int>(c)) % 2 == 0) ? 1 : -1;  // (-1)^{n+1-(c+1)}
  return chart.q.derivative(c).times_monomial(g.monomial, Int(sign));
}

IntPoly exterior_derivative_to_omega(const AffineChart& chart, const IntPoly& h, const std::vector<size_t>& J) {
  const size_t nv = chart.q.arity();
  IntPoly out(chart.q.variables());
  for (size_t i = 0; i < nv; ++i) {
    if (std::binary_search(J.begin(), J.end(), i)) continue;
    const IntPoly hi = h.derivative(i);
    if (hi.is_zero()) continue;
    // dx_i ∧ dx_J = (-1)^{#{j in J : j < i}} dx_{J ∪ {i}}
    const long before = std::count_if(J.begin(), J.end(), [i](size_t j) { return j < i; });
    std::vector<size_t> I = J;
    I.insert(std::upper_bound(I.begin(), I.end(), i), i);
    const IntPoly w = to_omega(chart, FormGenerator{Exponent(nv, 0), false, I});
    IntPoly t = hi * w;
    out = before % 2 == 0 ? out + t : out - t;
  }
  return out;
}

std::vector<IntPoly> relation_subspace(const AffineChart& chart, long k) {
  const int n = affine_dim(chart);
  std::vector<IntPoly> out;
  for (const auto& m : monomials_up_to(chart.q.arity(), k - n - 1)) out.push_back(chart.q.times_monomial(m));
  return out;
}

std::vector<IntPoly> exact_subspace(const AffineChart& chart, long k) {
  const int n = affine_dim(chart);
  const size_t nv = chart.q.arity();
  const auto& vars = chart.q.variables();
  std::vector<IntPoly> out;
  for (const auto& J : subsets(nv, static_cast<size_t>(n - 1))) {
    for (const auto& e : monomials_up_to(nv, k - (n - 1))) {
      IntPoly f = exterior_derivative_to_omega(chart, IntPoly::monomial(vars, e), J);
      if (!f.is_zero()) out.push_back(std::move(f));
    }
    for (const auto& e : monomials_up_to(nv, k - (n - 1) - chart.d)) {
      IntPoly f = exterior_derivative_to_omega(chart, chart.q.times_monomial(e), J);
      if (!f.is_zero()) out.push_back(std::move(f));
    }
  }
  return out;
}

OmegaSpace::OmegaSpace(size_t nvars, long bound, const std::function<bool(const Exponent&)>& keep)
    : nvars_(nvars), bound_(bound) {
  for (auto& e : monomials_up_to(nvars, bound))
    if (!keep || keep(e)) monomials_.push_back(std::move(e));
  std::sort(monomials_.begin(), monomials_.end(), [](const Exponent& a, const Exponent& b) {
    const long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  });
  for (size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], static_cast<uint32_t>(i));
}

std::optional<uint32_t> OmegaSpace::column(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseRow OmegaSpace::row(const IntPoly& f) const {
  std::vector<std::pair<uint32_t, Int>> pairs;
  for (const auto& [e, c] : f.terms()) {
    auto col = column(e);
    if (!col) throw std::out_of_range("OmegaSpace: monomial outside the ω-model space (degree overflow or non-invariant)");
    pairs.emplace_back(*col, c);
  }
  return SparseRow::from_pairs(std::move(pairs));
}

}  // namespace cryslat
