#include "cryslat/precision/plan.hpp"

#include <stdexcept>

namespace cryslat {

long torsion_exponent(int n, long k, long p) {
  require_prime(p);
  if (n < 1 || k < 1) throw std::invalid_argument("torsion_exponent: need n >= 1 and k >= 1");
  return static_cast<long>(n) * floor_log(p, k + 1);
}

std::string RootSum::str(long q) const {
  if (b == 0) return a.get_str();
  return a.get_str() + " + " + b.get_str() + "*sqrt(" + std::to_string(q) + ")";
}

long precision_for_bound(const RootSum& B, long q, long p) {
  // p^N > 2a + 2b√q  <=>  p^N − 2a > 0 and (p^N − 2a)² > 4b²q.
  Int pn = 1;
  for (long N = 0;; ++N, pn *= p) {
    const Int lhs = pn - 2 * B.a;
    if (lhs > 0 && lhs * lhs > 4 * B.b * B.b * q) return N;
  }
}

std::vector<CoefficientPrecision> coefficient_precisions(const std::vector<WeightClass>& classes, long q, long p) {
  require_prime(p);
  {
    long t = q;
    while (t % p == 0) t /= p;
    if (t != 1 || q < p) throw std::invalid_argument("coefficient_precisions: q must be a power of p");
  }
  // Π (1 + |α| T) over all roots, coefficients in Z[√q].
  std::vector<RootSum> poly{RootSum{1, 0}};
  for (const auto& c : classes) {
    if (c.count < 0 || c.weight < 0) throw std::invalid_argument("coefficient_precisions: negative count or weight");
    const Int qa = ipow(q, static_cast<unsigned long>(c.weight / 2));
    const bool half = c.weight % 2 == 1;
    for (long r = 0; r < c.count; ++r) {
      std::vector<RootSum> next(poly.size() + 1);
      for (size_t i = 0; i < poly.size(); ++i) {
        next[i].a += poly[i].a;
        next[i].b += poly[i].b;
        // times qa·(√q if half)
        if (half) {
          next[i + 1].a += poly[i].b * qa * q;
          next[i + 1].b += poly[i].a * qa;
        } else {
          next[i + 1].a += poly[i].a * qa;
          next[i + 1].b += poly[i].b * qa;
        }
      }
      poly.swap(next);
    }
  }
  std::vector<CoefficientPrecision> out;
  for (size_t i = 0; i < poly.size(); ++i) out.push_back({static_cast<long>(i), poly[i], precision_for_bound(poly[i], q, p)});
  return out;
}

FrobeniusPrecision required_frobenius_precision(const std::vector<long>& Ns, const HodgePolygon& polygon, int n, long k, long p) {
  if (static_cast<long>(Ns.size()) != polygon.total_rank() + 1)
    throw std::invalid_argument("required_frobenius_precision: need one N_i per abscissa 0..rank");
  FrobeniusPrecision f;
  f.tau = torsion_exponent(n, k, p);
  long best = 0;
  for (size_t i = 0; i < Ns.size(); ++i) {
    const long v = Ns[i] - polygon.floor_height(static_cast<long>(i));
    f.per_coefficient.push_back(v);
    if (i == 0 || v > best) best = v;
  }
  f.max_rule = best + f.tau;
  f.floor_value = n + f.tau + 1;
  f.clamped = f.max_rule < f.floor_value;
  f.value = f.clamped ? f.floor_value : f.max_rule;
  return f;
}

long coefficient_error_bound(long N, const HodgePolygon& polygon, long i, int n, long k, long p) {
  const long tau = torsion_exponent(n, k, p);
  if (N < n + tau + 1)
    throw std::invalid_argument("coefficient_error_bound: N = " + std::to_string(N) + " is below the hypothesis n + τ + 1 = " +
                                std::to_string(n + tau + 1));
  return N + polygon.floor_height(i) - tau;
}

PrecisionPlan make_precision_plan(const HodgeVector& pair, long hx_total, long hd_total, int n, long k, long p, long q) {
  PrecisionPlan plan;
  plan.p = p;
  plan.q = q;
  plan.n = n;
  plan.k = k;
  plan.tau = torsion_exponent(n, k, p);
  plan.p_power_frobenius_only = q != p;
  plan.pair_hodge = pair;
  plan.polygon = hodge_polygon(pair);
  if (hx_total + hd_total != pair.total()) throw std::invalid_argument("make_precision_plan: root counts do not match the pair rank");
  if (hx_total > 0) plan.weight_classes.push_back({hx_total, n});
  if (hd_total > 0) plan.weight_classes.push_back({hd_total, n + 1});
  plan.coefficients = coefficient_precisions(plan.weight_classes, q, p);
  std::vector<long> Ns;
  for (const auto& c : plan.coefficients) Ns.push_back(c.N);
  for (long i = 0; i <= plan.polygon.total_rank(); ++i) plan.gamma.push_back(plan.polygon.floor_height(i));
  plan.frobenius = required_frobenius_precision(Ns, plan.polygon, n, k, p);
  return plan;
}

}  // namespace cryslat
