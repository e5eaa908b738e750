#include <functional>

#include "cryslat/hodge/hodge.hpp"
#include "doctest.h"

using namespace cryslat;

namespace {

// Independent count: monomials X^β with 0 <= β_i <= d-2 and
// Σ(β_i + 1) = (q+1)d, restricted to β_i + 1 ≡ 0 mod a_i.
long brute_hodge(int N, int d, int q, const std::vector<int>& a) {
  const int nv = N + 2;
  const int target = (q + 1) * d;
  long count = 0;
  std::vector<int> beta(static_cast<size_t>(nv), 0);
  std::function<void(int, int)> rec = [&](int i, int sum) {
    if (i == nv) {
      if (sum == target) ++count;
      return;
    }
    for (int b = 0; b <= d - 2; ++b) {
      if ((b + 1) % a[static_cast<size_t>(i)] != 0) continue;
      rec(i + 1, sum + b + 1);
    }
  };
  rec(0, 0);
  return count;
}

// Primitive middle Betti number of a smooth degree-d hypersurface of dimension N.
long betti_prim(int N, int d) {
  long t = 1;
  for (int i = 0; i < N + 2; ++i) t *= (d - 1);
  return (t + (N % 2 == 0 ? (d - 1) : -(d - 1))) / d;
}

}  // namespace

TEST_CASE("primitive Hodge numbers of plane curves and surfaces") {
  CHECK(primitive_hodge_numbers(1, 7).h == std::vector<long>{15, 15});
  CHECK(primitive_hodge_numbers(0, 7).h == std::vector<long>{6});
  CHECK(primitive_hodge_numbers(2, 4).h == std::vector<long>{1, 19, 1});
  CHECK(primitive_hodge_numbers(2, 3).h == std::vector<long>{0, 6, 0});
  CHECK(primitive_hodge_numbers(1, 2).h == std::vector<long>{0, 0});
  CHECK(full_middle_betti(2, 4) == 22);
  CHECK(full_middle_betti(1, 3) == 2);
}

TEST_CASE("Hodge numbers match the Jacobian-ring count, the Betti formula and symmetry") {
  for (int N = 0; N <= 3; ++N)
    for (int d = 2; d <= 7; ++d) {
      CAPTURE(N);
      CAPTURE(d);
      const HodgeVector h = primitive_hodge_numbers(N, d);
      REQUIRE(h.h.size() == static_cast<size_t>(N) + 1);
      const std::vector<int> ones(static_cast<size_t>(N) + 2, 1);
      for (int q = 0; q <= N; ++q) CHECK(h.h[static_cast<size_t>(q)] == brute_hodge(N, d, q, ones));
      for (int q = 0; q <= N; ++q) CHECK(h.h[static_cast<size_t>(q)] == h.h[static_cast<size_t>(N - q)]);
      CHECK(h.total() == betti_prim(N, d));
    }
}

TEST_CASE("invariant Hodge numbers of weighted quotients") {
  CHECK(invariant_primitive_hodge_numbers(2, 18, {6, 9, 1, 1}).h == std::vector<long>{2, 28, 2});
  CHECK(invariant_primitive_hodge_numbers(1, 18, {6, 9, 1}).h == std::vector<long>{1, 1});
  CHECK(invariant_primitive_hodge_numbers(2, 4, {1, 1, 1, 1}) == primitive_hodge_numbers(2, 4));
  CHECK_THROWS_AS(invariant_primitive_hodge_numbers(1, 7, {2, 1, 1}), std::invalid_argument);
  for (const auto& a : std::vector<std::vector<int>>{{2, 1, 1}, {3, 1, 1}, {2, 3, 1}, {2, 2, 1}}) {
    const HodgeVector h = invariant_primitive_hodge_numbers(1, 6, a);
    for (int q = 0; q <= 1; ++q) CHECK(h.h[static_cast<size_t>(q)] == brute_hodge(1, 6, q, a));
  }
}

TEST_CASE("pair Hodge numbers") {
  const HodgeVector pair = pair_hodge_numbers(primitive_hodge_numbers(1, 7), primitive_hodge_numbers(0, 7));
  CHECK(pair.h == std::vector<long>{15, 21});
  CHECK(pair.total() == 36);
  const HodgeVector surf = pair_hodge_numbers(invariant_primitive_hodge_numbers(2, 18, {6, 9, 1, 1}),
                                              invariant_primitive_hodge_numbers(1, 18, {6, 9, 1}));
  CHECK(surf.h == std::vector<long>{2, 29, 3});
  CHECK(surf.total() == 34);
  CHECK_THROWS(pair_hodge_numbers(primitive_hodge_numbers(1, 3), primitive_hodge_numbers(1, 3)));
}

TEST_CASE("Hodge polygons") {
  const HodgePolygon g = hodge_polygon(pair_hodge_numbers(primitive_hodge_numbers(1, 7), primitive_hodge_numbers(0, 7)));
  CHECK(g.vertices == std::vector<std::pair<long, long>>{{0, 0}, {15, 0}, {36, 21}});
  CHECK(g.height(20) == 5);
  CHECK(g.slope_at(15) == 0);
  CHECK(g.slope_at(16) == 1);
  const HodgePolygon k3 = hodge_polygon(primitive_hodge_numbers(2, 4));
  CHECK(k3.vertices == std::vector<std::pair<long, long>>{{0, 0}, {1, 0}, {20, 19}, {21, 21}});
  // zero Hodge numbers leave no vertex behind
  const HodgePolygon cubic = hodge_polygon(primitive_hodge_numbers(2, 3));
  CHECK(cubic.vertices == std::vector<std::pair<long, long>>{{0, 0}, {6, 6}});
  CHECK(cubic.floor_height(3) == 3);
  // non-integral heights from a genuine hull
  const HodgePolygon h = lower_hull({{0, Rat(0)}, {1, Rat(1)}, {2, Rat(1)}});
  CHECK(h.vertices == std::vector<std::pair<long, long>>{{0, 0}, {2, 1}});
  CHECK(h.height(1) == Rat(1, 2));
  CHECK(h.floor_height(1) == 0);
}

TEST_CASE("polygon properties: convex, endpoints, slopes are the Hodge indices") {
  for (int N = 1; N <= 3; ++N)
    for (int d = 3; d <= 6; ++d) {
      const HodgeVector pair = pair_hodge_numbers(primitive_hodge_numbers(N, d), primitive_hodge_numbers(N - 1, d));
      const HodgePolygon g = hodge_polygon(pair);
      long rank = 0, top = 0;
      for (size_t i = 0; i < pair.h.size(); ++i) {
        rank += pair.h[i];
        top += static_cast<long>(i) * pair.h[i];
      }
      CHECK(g.vertices.front() == std::pair<long, long>{0, 0});
      CHECK(g.vertices.back() == std::pair<long, long>{rank, top});
      for (long x = 1; x < rank; ++x) CHECK(2 * g.height(x) <= g.height(x - 1) + g.height(x + 1));
      for (long x = 1; x <= rank; ++x) {
        const Rat s = g.slope_at(x);
        CHECK(s.get_den() == 1);
        CHECK(s >= 0);
        CHECK(s <= N);
      }
    }
}
