#include "cryslat/golden/golden.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "cryslat/arith/poly_parse.hpp"
#include "cryslat/logdr/forms.hpp"

namespace cryslat {

namespace {

/// f / x^e, requiring exact divisibility.
IntPoly divide_by_monomial(const IntPoly& f, const Exponent& e) {
  IntPoly r(f.variables(), f.weights());
  for (const auto& [m, c] : f.terms()) {
    Exponent q = m;
    for (size_t i = 0; i < q.size(); ++i) {
      q[i] -= e[i];
      if (q[i] < 0) throw std::logic_error("divide_by_monomial: not divisible");
    }
    r.add_term(q, c);
  }
  return r;
}

size_t chart_position(const AffineChart& chart, const std::string& name) {
  const auto& vars = chart.q.variables();
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  throw std::logic_error("golden: chart has no variable " + name);
}

}  // namespace

GoldenCase curve_golden_case() {
  const std::vector<std::string> vars{"x", "y"};
  const IntPoly affine = parse_polynomial(
      "x^7+x^6y+3x^5y^2+x^3y^3+x^2y^5+3x^2y+2xy^6+2x+3y^7+y^5+3y^4+y+3", vars);
  GoldenCase c;
  c.name = "plane curve of degree 7 over F_5";
  c.spec = PairSpec::make(5, 1, 7, affine.homogenize(2, "z", 7), 2, std::nullopt, "curve7");
  c.k = 12;
  c.expected_minimal_k = 12;
  c.expected_rank = 36;
  c.forms = [](const AffineChart& chart) {
    const size_t ix = chart_position(chart, "x"), iy = chart_position(chart, "y");
    const int ymax[] = {10, 9, 8, 5};
    std::vector<IntPoly> out;
    for (int i = 1; i <= 4; ++i)
      for (int j = 0; j <= ymax[i - 1]; ++j) {
        FormGenerator g;
        g.monomial.assign(chart.q.arity(), 0);
        g.monomial[ix] = i;
        g.monomial[iy] = j;
        g.subset = {iy};
        out.push_back(to_omega(chart, g));
      }
    return out;
  };
  return c;
}

GoldenCase surface_golden_case() {
  const std::vector<std::string> vars{"x", "y", "t"};
  const std::vector<int> w{6, 9, 1};
  const IntPoly affine = parse_polynomial(
      "y^2 = x^3 + t^12x + t^9x + 3t^2x + tx + x + t^18 + 2t^17 + t^15 + t^7 + t^3 + 1", vars, w);
  GoldenCase c;
  c.name = "elliptic surface in P(6,9,1,1) over F_11";
  c.spec = PairSpec::make(11, 2, 18, affine.homogenize(3, "w", 18), 3, std::vector<int>{6, 9, 1, 1}, "surface11");
  c.k = 53;
  c.expected_minimal_k = 51;
  c.expected_rank = 34;
  c.forms = [](const AffineChart& chart) {
    // On the cover x = X^6, y = Y^9, t = T:
    //   x^a t^c dx∧dt / y = 6 X^{6a+5} T^c dX∧dT / Y^9.
    const size_t ix = chart_position(chart, "x"), iy = chart_position(chart, "y"), it = chart_position(chart, "t");
    Exponent y9(chart.q.arity(), 0);
    y9[iy] = 9;
    std::vector<IntPoly> out;
    auto add = [&](int a, int cmax) {
      for (int cc = 0; cc <= cmax; ++cc) {
        FormGenerator g;
        g.monomial.assign(chart.q.arity(), 0);
        g.monomial[ix] = 6 * a + 5;
        g.monomial[it] = cc;
        g.subset = {std::min(ix, it), std::max(ix, it)};
        out.push_back(divide_by_monomial(to_omega(chart, g), y9).scaled(Int(6)));
      }
    };
    add(0, 22);
    add(1, 10);
    return out;
  };
  return c;
}

long determinant_valuation(const std::vector<std::vector<Rat>>& M0, long p) {
  auto M = M0;
  const size_t n = M.size();
  for (const auto& r : M)
    if (r.size() != n) throw std::invalid_argument("determinant_valuation: matrix is not square");
  long v = 0;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    for (size_t r = c; r < n; ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv == n) return -1;
    std::swap(M[c], M[piv]);
    v += rational_valuation(M[c][c], p);
    for (size_t r = c + 1; r < n; ++r) {
      if (M[r][c] == 0) continue;
      const Rat f = M[r][c] / M[c][c];
      for (size_t j = c; j < n; ++j) M[r][j] -= f * M[c][j];
    }
  }
  return v;
}

std::string GoldenResult::summary() const {
  std::ostringstream os;
  os << name << ": minimal k " << minimal_k << ", k " << k << ", rank " << rank << " (expected " << expected_rank << "), "
     << listed_forms << " listed forms, max torsion " << max_form_torsion << ", det valuation " << determinant_valuation
     << ", " << seconds << " s";
  return os.str();
}

GoldenResult verify_golden(const GoldenCase& c, unsigned threads) {
  const auto t0 = std::chrono::steady_clock::now();
  LatticeOptions opt;
  opt.threads = threads;
  opt.check_rank = false;
  const LatticeBasis B = invariant_lattice_basis(c.spec, c.k, opt);
  GoldenResult r;
  r.name = c.name;
  r.minimal_k = B.minimal_k;
  r.k = B.k;
  r.rank = static_cast<long>(B.rank());
  r.expected_rank = c.expected_rank;
  const auto forms = c.forms(B.engine->chart);
  r.listed_forms = static_cast<long>(forms.size());
  std::vector<std::vector<Rat>> M;
  for (const auto& f : forms) {
    const ReducedForm red = reduce_form(B, f);
    r.max_form_torsion = std::max(r.max_form_torsion, red.torsion_exponent);
    M.push_back(red.coords);
  }
  if (r.listed_forms == r.rank) r.determinant_valuation = determinant_valuation(M, c.spec.p);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace cryslat
