#include "cryslat/arith/poly_parse.hpp"
#include "cryslat/report/report.hpp"
#include "cryslat/variety/points.hpp"
#include "cryslat/zeta/zeta.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cryslat;

namespace {

// #V(Q)(F_p) by looping over normalised projective representatives.
long naive_projective_count(const PairSpec& s) {
  const size_t nv = s.nvars();
  long count = 0;
  std::vector<long> x(nv, 0);
  for (size_t lead = 0; lead < nv; ++lead) {
    // x = (0, …, 0, 1, *, …, *)
    const size_t free = nv - lead - 1;
    long total = 1;
    for (size_t i = 0; i < free; ++i) total *= s.p;
    for (long idx = 0; idx < total; ++idx) {
      std::fill(x.begin(), x.end(), 0);
      x[lead] = 1;
      long r = idx;
      for (size_t i = lead + 1; i < nv; ++i, r /= s.p) x[i] = r % s.p;
      Int v = 0;
      for (const auto& [e, c] : s.Q.terms()) {
        Int t = c;
        for (size_t i = 0; i < nv; ++i)
          for (int k = 0; k < e[i]; ++k) t *= x[i];
        v += t;
      }
      if (v % s.p == 0) ++count;
    }
  }
  return count;
}

PairSpec plane(long p, int d, const std::string& eq, std::optional<size_t> hyperplane = std::nullopt) {
  return PairSpec::make(p, 1, d, parse_polynomial(eq, {"x", "y", "z"}), hyperplane);
}

ZPoly zp(std::initializer_list<long> c) {
  ZPoly r;
  for (long v : c) r.emplace_back(v);
  return r;
}

}  // namespace

TEST_CASE("point counts against direct enumeration") {
  CHECK(count_points(plane(5, 2, "x^2 + y^2 + z^2"), 1) == 6);
  CHECK(count_points(plane(2, 3, "x^3 + y^3 + z^3"), 1) == 3);
  for (const auto& name : fixtures::all_fixtures()) {
    const PairSpec s = fixtures::load(name);
    if (s.weighted()) continue;
    CAPTURE(name);
    CHECK(count_points(s, 1) == naive_projective_count(s));
  }
}

TEST_CASE("weighted counts divide the cone by q - 1") {
  // z = x^2 + y^2 in P(1,1,2) is a copy of P^1
  const IntPoly Q = parse_polynomial("z - x^2 - y^2", {"x", "y", "z"}, std::vector<int>{1, 1, 2});
  const PairSpec s = PairSpec::make(5, 1, 2, Q, 0, std::vector<int>{1, 1, 2});
  CHECK(count_points(s, 1) == 6);
  CHECK(count_points(s, 2) == 26);
}

TEST_CASE("regression counts of the fixtures") {
  const CountVector e = count_vector(fixtures::load("elliptic_p5"), 2);
  CHECK(e.counts == std::vector<Int>{9, 27});
  CHECK(count_points(fixtures::load("curve7_p5"), 1) == 7);
  CHECK(count_points(fixtures::load("surface_p11"), 1, {4}) == 127);
}

TEST_CASE("counts do not depend on the thread count") {
  const PairSpec s = fixtures::load("quartic_surface_p5");
  CHECK(count_vector(s, 2, {1}).counts == count_vector(s, 2, {6}).counts);
}

TEST_CASE("enumeration respects the budget") {
  CountOptions opt;
  opt.budget = 10;
  CHECK_THROWS_AS(count_points(fixtures::load("cubic_surface_p5"), 1, opt), BudgetExceeded);
}

TEST_CASE("zeta numerators of curves") {
  CHECK(plane_curve_genus(2) == 0);
  CHECK(plane_curve_genus(3) == 1);
  CHECK(plane_curve_genus(7) == 15);
  const auto conic = curve_zeta_numerator(count_vector(plane(5, 2, "x^2 + y^2 + z^2"), 1), 0);
  CHECK(conic.coeffs == zp({1}));

  const auto e = curve_zeta_numerator(count_vector(fixtures::load("elliptic_p5"), 1), 1);
  CHECK(e.coeffs == zp({1, 3, 5}));
  CHECK(assemble_zeta(e.coeffs, 1, 5).counts(4) == count_vector(fixtures::load("elliptic_p5"), 4).counts);

  const ZetaRun r = run_zeta(fixtures::load("quartic_curve_p5"), 3);
  REQUIRE(r.numerator);
  CHECK(r.numerator->coeffs.size() == 7);
  CHECK(r.numerator->coeffs.back() == 125);
  CHECK(r.counts_match);
  CHECK(r.functional_equation);
  CHECK(r.weil_bound);
  CHECK(r.ok());
}

TEST_CASE("zeta helpers") {
  CHECK(power_sums(zp({1, 3, 5}), 2) == std::vector<Int>{-3, -1});
  CHECK(satisfies_functional_equation(zp({1, 3, 5}), 5, 1));
  CHECK_FALSE(satisfies_functional_equation(zp({1, 3, 4}), 5, 1));
  CHECK(satisfies_weil_bound(zp({1, 4, 5}), 5, 1));
  CHECK_FALSE(satisfies_weil_bound(zp({1, 5, 5}), 5, 1));
  CHECK(zpoly_scale_variable(zp({1, -1}), 5) == zp({1, -5}));
  CHECK(zpoly_mul(zp({1, -1}), zp({1, 1})) == zp({1, 0, -1}));
  CHECK(zpoly_str(zp({1, -3, 5})) == "1 - 3T + 5T^2");
  CHECK(split_charpoly(zp({1, -6, 5}), zp({1, -5})) == zp({1, -1}));
  CHECK_THROWS_AS(split_charpoly(zp({1, -6, 5}), zp({1, -2})), std::domain_error);
  CHECK(zpoly_trim(zp({1, 0, 0})) == zp({1}));
}

TEST_CASE("Frobenius on the points of D") {
  const std::vector<std::string> v{"x", "z"};
  const auto split = points_charpoly_on_D(PairSpec::make(7, 0, 7, parse_polynomial("x^7 - xz^6", v)));
  CHECK(split.factor_degrees == std::vector<int>(7, 1));
  CHECK(split.full == zpoly_mul(zp({1, -1}), zpoly_mul(zpoly_mul(zp({1, -2, 1}), zp({1, -2, 1})), zp({1, -2, 1}))));
  const auto mixed = points_charpoly_on_D(PairSpec::make(5, 0, 3, parse_polynomial("x^3 - 2xz^2", v)));
  CHECK(mixed.factor_degrees == std::vector<int>{1, 2});
  CHECK(mixed.full == zp({1, -1, -1, 1}));
  CHECK(mixed.primitive == zp({1, 0, -1}));
  CHECK(mixed.twisted == zp({1, 0, -25}));
  const auto inf = points_charpoly_on_D(PairSpec::make(5, 0, 3, parse_polynomial("x^2z + xz^2", v)));
  CHECK(inf.factor_degrees == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(points_charpoly_on_D(PairSpec::make(5, 0, 3, parse_polynomial("x^2z", v))), SpecError);
}

TEST_CASE("Newton polygons") {
  CHECK(newton_polygon(zp({1, 3, 5}), 5).vertices == std::vector<std::pair<long, long>>{{0, 0}, {1, 0}, {2, 1}});
  const HodgePolygon ss = newton_polygon(zp({1, 0, 5}), 5);
  CHECK(ss.vertices == std::vector<std::pair<long, long>>{{0, 0}, {2, 1}});
  CHECK(ss.height(1) == Rat(1, 2));
  const HodgePolygon hodge = hodge_polygon(primitive_hodge_numbers(1, 3));
  CHECK(check_newton_above_hodge(ss, hodge).above);
  const HodgePolygon steep{{{0, 0}, {1, 1}}};
  const PolygonComparison bad = check_newton_above_hodge(newton_polygon(zp({1, 1}), 5), steep);
  CHECK_FALSE(bad.above);
  CHECK(bad.first_failure == 1);
  CHECK_THROWS(newton_polygon(zp({2, 1}), 5));
}

TEST_CASE("the Newton polygon lies above the Hodge polygon on small-genus fixtures") {
  for (const auto& name : {"elliptic_p5", "cubic_curve_p5", "cubic_curve_p7", "quartic_curve_p5", "quartic_curve_p7"}) {
    CAPTURE(name);
    const PairSpec s = fixtures::load(name);
    const ZetaRun r = run_zeta(s, static_cast<int>(plane_curve_genus(s.d)));
    REQUIRE(r.newton);
    CHECK(r.newton_vs_hodge.above);
    CHECK(r.ok());
    REQUIRE(r.section);
    CHECK(r.section->full.size() == static_cast<size_t>(s.d) + 1);
  }
}

TEST_CASE("surfaces: the Weil interval at m = 1") {
  for (const auto& name : {"cubic_surface_p5", "quartic_surface_p5"}) {
    CAPTURE(name);
    const ZetaRun r = run_zeta(fixtures::load(name), 1);
    REQUIRE(r.weil_interval_m1);
    CHECK(*r.weil_interval_m1);
  }
}
