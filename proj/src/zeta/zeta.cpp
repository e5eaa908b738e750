#include "cryslat/zeta/zeta.hpp"

#include <algorithm>
#include <stdexcept>

#include "cryslat/arith/prime_field.hpp"
#include "cryslat/variety/points.hpp"

namespace cryslat {

ZPoly zpoly_trim(ZPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zpoly_trim(r);
}

ZPoly zpoly_divide_exact(const ZPoly& a0, const ZPoly& b0) {
  const ZPoly a = zpoly_trim(a0), b = zpoly_trim(b0);
  if (b.empty()) throw std::domain_error("zpoly_divide_exact: division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::domain_error("inexact division: divisor has larger degree");
  ZPoly rem = a, quo(a.size() - b.size() + 1, Int(0));
  for (size_t i = quo.size(); i-- > 0;) {
    const Int& top = rem[i + b.size() - 1];
    if (top % b.back() != 0) throw std::domain_error("inexact division: " + zpoly_str(b) + " does not divide " + zpoly_str(a));
    quo[i] = top / b.back();
    for (size_t j = 0; j < b.size(); ++j) rem[i + j] -= quo[i] * b[j];
  }
  for (const Int& c : rem)
    if (c != 0) throw std::domain_error("inexact division: " + zpoly_str(b) + " does not divide " + zpoly_str(a));
  return zpoly_trim(quo);
}

ZPoly zpoly_scale_variable(const ZPoly& a, const Int& c) {
  ZPoly r = a;
  Int f = 1;
  for (auto& x : r) {
    x *= f;
    f *= c;
  }
  return zpoly_trim(r);
}

std::string zpoly_str(const ZPoly& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Int c = a[i];
    if (s.empty()) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (i == 0 || c != 1) s += c.get_str();
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

Int count_points(const PairSpec& spec, int m, const CountOptions& opt) {
  if (m < 1) throw std::invalid_argument("count_points: m must be positive");
  const auto F = ExtField::make(spec.p, m);
  const long q = F->order();
  const size_t nv = spec.nvars();
  const CompiledPoly f(spec.Q, *F);
  std::vector<std::vector<long>> pows;
  if (spec.weighted()) {
    const Int cone = ipow(q, static_cast<unsigned long>(nv)) - 1;
    if (cone > opt.budget)
      throw BudgetExceeded("count_points: " + cone.get_str() + " cone points over F_" + std::to_string(q) + " exceed the budget " +
                           opt.budget.get_str());
    std::vector<long> per(static_cast<size_t>(q), 0);
    for_each_cone_point(nv, *F, opt.threads, [&](size_t chunk, const std::vector<long>& pt) {
      thread_local std::vector<std::vector<long>> tp;
      power_table(*F, pt, f.max_exponent(), tp);
      if (f.eval(tp) == 0) ++per[chunk];
    });
    Int total = 0;
    for (long c : per) total += c;
    if (total % (q - 1) != 0) throw std::logic_error("count_points: cone count not divisible by q-1");
    return total / (q - 1);
  }
  const Int npts = projective_point_count(nv, q);
  if (npts > opt.budget)
    throw BudgetExceeded("count_points: " + npts.get_str() + " projective points over F_" + std::to_string(q) +
                         " exceed the budget " + opt.budget.get_str());
  std::vector<long> per(projective_chunks(nv, q), 0);
  for_each_projective_point(nv, *F, opt.threads, [&](size_t chunk, const std::vector<long>& pt) {
    thread_local std::vector<std::vector<long>> tp;
    power_table(*F, pt, f.max_exponent(), tp);
    if (f.eval(tp) == 0) ++per[chunk];
    return false;
  });
  Int total = 0;
  for (long c : per) total += c;
  return total;
}

CountVector count_vector(const PairSpec& spec, int M, const CountOptions& opt) {
  CountVector cv;
  cv.q = spec.p;
  for (int m = 1; m <= M; ++m) cv.counts.push_back(count_points(spec, m, opt));
  return cv;
}

long plane_curve_genus(int d) { return static_cast<long>(d - 1) * (d - 2) / 2; }

std::vector<Int> power_sums(const ZPoly& P, int M) {
  if (P.empty() || P[0] != 1) throw std::invalid_argument("power_sums: need P(0) = 1");
  // Newton: s_m = −m a_m − Σ_{j=1}^{m-1} a_j s_{m−j}.
  std::vector<Int> s(static_cast<size_t>(M) + 1, Int(0));
  auto a = [&](long i) { return i < static_cast<long>(P.size()) ? P[static_cast<size_t>(i)] : Int(0); };
  for (long m = 1; m <= M; ++m) {
    Int v = -m * a(m);
    for (long j = 1; j < m; ++j) v -= a(j) * s[static_cast<size_t>(m - j)];
    s[static_cast<size_t>(m)] = v;
  }
  return {s.begin() + 1, s.end()};
}

ZetaNumerator curve_zeta_numerator(const CountVector& cv, long genus) {
  if (genus < 0) throw std::invalid_argument("curve_zeta_numerator: negative genus");
  if (static_cast<long>(cv.counts.size()) < genus)
    throw std::invalid_argument("curve_zeta_numerator: need counts for m = 1.." + std::to_string(genus));
  ZetaNumerator Z;
  Z.q = cv.q;
  Z.genus = genus;
  ZPoly a(static_cast<size_t>(2 * genus) + 1, Int(0));
  a[0] = 1;
  std::vector<Int> s(static_cast<size_t>(genus) + 1, Int(0));
  for (long m = 1; m <= genus; ++m) s[static_cast<size_t>(m)] = ipow(cv.q, static_cast<unsigned long>(m)) + 1 - cv.counts[static_cast<size_t>(m - 1)];
  for (long i = 1; i <= genus; ++i) {
    // i a_i = −Σ_{j=1}^{i} s_j a_{i−j}
    Int v = 0;
    for (long j = 1; j <= i; ++j) v -= s[static_cast<size_t>(j)] * a[static_cast<size_t>(i - j)];
    if (v % i != 0)
      throw std::domain_error("curve_zeta_numerator: coefficient a_" + std::to_string(i) + " = " + v.get_str() + "/" +
                              std::to_string(i) + " is not an integer (bad counts or singular curve)");
    a[static_cast<size_t>(i)] = v / i;
  }
  for (long i = 0; i < genus; ++i)
    a[static_cast<size_t>(2 * genus - i)] = ipow(cv.q, static_cast<unsigned long>(genus - i)) * a[static_cast<size_t>(i)];
  Z.coeffs = zpoly_trim(a);
  return Z;
}

ZetaFunction assemble_zeta(const ZPoly& P, int n, long q) {
  if (P.empty() || P[0] != 1) throw std::invalid_argument("assemble_zeta: need P(0) = 1");
  ZetaFunction Z;
  Z.n = n;
  Z.q = q;
  Z.numerator = P;
  Z.numerator_exponent = (n + 1) % 2 == 0 ? 1 : -1;
  return Z;
}

std::vector<Int> ZetaFunction::counts(int M) const {
  // log Z = ε·log P − Σ_j log(1 − q^j T), ε = (−1)^{n+1}; log P = −Σ s_m T^m/m.
  const auto s = power_sums(numerator, M);
  std::vector<Int> out;
  for (int m = 1; m <= M; ++m) {
    Int c = 0;
    for (int j = 0; j <= n; ++j) c += ipow(q, static_cast<unsigned long>(j) * static_cast<unsigned long>(m));
    c -= numerator_exponent * s[static_cast<size_t>(m - 1)];
    out.push_back(c);
  }
  return out;
}

std::string ZetaFunction::str() const {
  std::string den;
  for (int j = 0; j <= n; ++j) {
    const Int c = ipow(q, static_cast<unsigned long>(j));
    den += "(1 - " + (j == 0 ? std::string() : c.get_str()) + "T)";
  }
  const std::string num = "(" + zpoly_str(numerator) + ")";
  if (numerator_exponent > 0) return num + " / " + den;
  return "1 / (" + num + den + ")";
}

bool satisfies_functional_equation(const ZPoly& P, long q, long genus) {
  const ZPoly a = zpoly_trim(P);
  if (static_cast<long>(a.size()) != 2 * genus + 1) return genus == 0 && a == ZPoly{Int(1)};
  for (long i = 0; i <= 2 * genus; ++i) {
    // coefficient of T^{2g−i} on the left: q^{g−i} a_i  (as rationals for i > g)
    const Int& ai = a[static_cast<size_t>(i)];
    const Int& aj = a[static_cast<size_t>(2 * genus - i)];
    if (i <= genus) {
      if (aj != ipow(q, static_cast<unsigned long>(genus - i)) * ai) return false;
    } else if (ai != ipow(q, static_cast<unsigned long>(i - genus)) * aj) {
      return false;
    }
  }
  return true;
}

bool satisfies_weil_bound(const ZPoly& P, long q, long genus) {
  const Int a1 = P.size() > 1 ? P[1] : Int(0);
  return a1 * a1 <= Int(4) * genus * genus * q;
}

ZPoly split_charpoly(const ZPoly& P, const ZPoly& P_D_twisted) { return zpoly_divide_exact(P, P_D_twisted); }

PointCharPoly points_charpoly_on_D(const PairSpec& D) {
  if (D.n != 0 || D.nvars() != 2 || D.weighted())
    throw SpecError("dimension", "points_charpoly_on_D needs an unweighted binary form (n = 0)");
  const long p = D.p;
  // f(x) = F(x, 1); the deficit in degree is the multiplicity of (1:0).
  std::vector<long> c(static_cast<size_t>(D.d) + 1, 0);
  for (const auto& [e, v] : D.Q.terms()) c[static_cast<size_t>(e[0])] = mod_floor(Int(v % p).get_si(), p);
  const FpPoly f(p, c);
  const long at_infinity = D.d - f.degree();
  if (at_infinity > 1) throw SpecError("reduced", "D has a repeated point at infinity");
  if (f.degree() > 0 && !is_squarefree(f)) throw SpecError("reduced", "D has a repeated point (binary form not squarefree)");
  PointCharPoly out;
  if (f.degree() > 0) out.factor_degrees = factor_degrees(f);
  if (at_infinity == 1) out.factor_degrees.push_back(1);
  std::sort(out.factor_degrees.begin(), out.factor_degrees.end());
  out.full = {Int(1)};
  for (int dj : out.factor_degrees) {
    ZPoly fac(static_cast<size_t>(dj) + 1, Int(0));
    fac[0] = 1;
    fac[static_cast<size_t>(dj)] = -1;
    out.full = zpoly_mul(out.full, fac);
  }
  out.primitive = zpoly_divide_exact(out.full, ZPoly{Int(1), Int(-1)});
  out.twisted = zpoly_scale_variable(out.primitive, Int(p));
  return out;
}

HodgePolygon newton_polygon(const ZPoly& P, long p) {
  const ZPoly a = zpoly_trim(P);
  if (a.empty() || a[0] != 1) throw std::invalid_argument("newton_polygon: need P(0) = 1");
  std::vector<std::pair<long, Rat>> pts;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) pts.emplace_back(static_cast<long>(i), Rat(valuation(a[i], p).value));
  return lower_hull(pts);
}

PolygonComparison check_newton_above_hodge(const HodgePolygon& newton, const HodgePolygon& hodge) {
  PolygonComparison r;
  const long top = std::min(newton.total_rank(), hodge.total_rank());
  for (long i = 0; i <= top; ++i) {
    const Rat nh = newton.height(i), hh = hodge.height(i);
    if (nh < hh) {
      r.above = false;
      r.first_failure = i;
      r.newton_height = nh;
      r.hodge_height = hh;
      return r;
    }
  }
  return r;
}

}  // namespace cryslat
