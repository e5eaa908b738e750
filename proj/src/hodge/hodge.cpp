#include "cryslat/hodge/hodge.hpp"

#include <stdexcept>

namespace cryslat {

long HodgeVector::total() const {
  long s = 0;
  for (long x : h) s += x;
  return s;
}

namespace {

// Product over coordinates of Σ_{β allowed} t^β.
std::vector<Int> exponent_series(int N, int d, const std::vector<int>& weights) {
  std::vector<Int> poly{1};
  for (int i = 0; i < N + 2; ++i) {
    std::vector<Int> f;
    for (int b = 0; b <= d - 2; ++b)
      if ((b + 1) % weights[static_cast<size_t>(i)] == 0) {
        if (f.size() <= static_cast<size_t>(b)) f.resize(static_cast<size_t>(b) + 1);
        f[static_cast<size_t>(b)] = 1;
      }
    if (f.empty()) return {};
    std::vector<Int> r(poly.size() + f.size() - 1);
    for (size_t a = 0; a < poly.size(); ++a)
      if (poly[a] != 0)
        for (size_t b = 0; b < f.size(); ++b)
          if (f[b] != 0) r[a + b] += poly[a] * f[b];
    poly.swap(r);
  }
  return poly;
}

HodgeVector from_series(int N, int d, const std::vector<Int>& series) {
  HodgeVector v;
  v.n = N;
  v.h.assign(static_cast<size_t>(N) + 1, 0);
  for (int q = 0; q <= N; ++q) {
    const long e = static_cast<long>(q + 1) * d - (N + 2);
    if (e >= 0 && static_cast<size_t>(e) < series.size()) v.h[static_cast<size_t>(N - q)] = series[static_cast<size_t>(e)].get_si();
  }
  return v;
}

}  // namespace

HodgeVector primitive_hodge_numbers(int N, int d) {
  if (N < 0 || d < 1) throw std::invalid_argument("primitive_hodge_numbers: need N >= 0 and d >= 1");
  return from_series(N, d, exponent_series(N, d, std::vector<int>(static_cast<size_t>(N) + 2, 1)));
}

HodgeVector invariant_primitive_hodge_numbers(int N, int d, const std::vector<int>& weights) {
  if (N < 0 || d < 1) throw std::invalid_argument("invariant_primitive_hodge_numbers: need N >= 0 and d >= 1");
  if (weights.size() != static_cast<size_t>(N) + 2) throw std::invalid_argument("invariant_primitive_hodge_numbers: need N+2 weights");
  for (int a : weights)
    if (a < 1 || d % a != 0) throw std::invalid_argument("invariant_primitive_hodge_numbers: every weight must divide d");
  return from_series(N, d, exponent_series(N, d, weights));
}

HodgeVector pair_hodge_numbers(const HodgeVector& hx, const HodgeVector& hd) {
  if (hd.n != hx.n - 1 || hx.h.size() != static_cast<size_t>(hx.n) + 1 || hd.h.size() != static_cast<size_t>(hd.n) + 1)
    throw std::invalid_argument("pair_hodge_numbers: dimensions must differ by one");
  HodgeVector r;
  r.n = hx.n;
  r.primitive = false;
  r.h = hx.h;
  for (int i = 1; i <= hx.n; ++i) r.h[static_cast<size_t>(i)] += hd.h[static_cast<size_t>(i) - 1];
  return r;
}

long full_middle_betti(int N, int d) { return primitive_hodge_numbers(N, d).total() + (N % 2 == 0 ? 1 : 0); }

HodgePolygon lower_hull(std::vector<std::pair<long, Rat>> pts) {
  HodgePolygon poly;
  std::vector<std::pair<long, Rat>> hull;
  for (const auto& pt : pts) {
    if (!hull.empty() && hull.back().first == pt.first) {
      if (pt.second >= hull.back().second) continue;
      hull.pop_back();
    }
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b if it lies on or above the segment a -> pt.
      const Rat lhs = (b.second - a.second) * (pt.first - a.first);
      const Rat rhs = (pt.second - a.second) * (b.first - a.first);
      if (lhs >= rhs)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  for (const auto& [x, y] : hull) {
    if (y.get_den() != 1) throw std::logic_error("lower_hull: non-integral vertex");
    poly.vertices.emplace_back(x, y.get_num().get_si());
  }
  return poly;
}

HodgePolygon hodge_polygon(const HodgeVector& pair) {
  std::vector<std::pair<long, Rat>> pts{{0, Rat(0)}};
  long x = 0, y = 0;
  for (size_t i = 0; i < pair.h.size(); ++i) {
    if (pair.h[i] < 0) throw std::invalid_argument("hodge_polygon: negative Hodge number");
    if (pair.h[i] == 0) continue;
    x += pair.h[i];
    y += static_cast<long>(i) * pair.h[i];
    pts.emplace_back(x, Rat(y));
  }
  return lower_hull(pts);
}

Rat HodgePolygon::height(long x) const {
  if (vertices.empty()) throw std::logic_error("HodgePolygon: empty polygon");
  if (x < 0 || x > total_rank()) throw std::out_of_range("HodgePolygon: abscissa out of range");
  for (size_t i = 0; i + 1 < vertices.size(); ++i) {
    const auto& [x0, y0] = vertices[i];
    const auto& [x1, y1] = vertices[i + 1];
    if (x >= x0 && x <= x1) return Rat(y0) + Rat(y1 - y0) / Rat(x1 - x0) * Rat(x - x0);
  }
  return Rat(vertices.back().second);
}

long HodgePolygon::floor_height(long x) const {
  const Rat h = height(x);
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return f.get_si();
}

Rat HodgePolygon::slope_at(long x) const {
  if (x < 1 || x > total_rank()) throw std::out_of_range("HodgePolygon: abscissa out of range");
  return height(x) - height(x - 1);
}

}  // namespace cryslat
