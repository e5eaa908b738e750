#include <functional>
#include <mutex>
#include <set>

#include "cryslat/arith/poly_parse.hpp"
#include "cryslat/variety/points.hpp"
#include "cryslat/variety/probe.hpp"
#include "cryslat/variety/spec_io.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cryslat;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

PairSpec curve(long p, int d, const std::string& eq, std::optional<size_t> h = std::nullopt) {
  return PairSpec::make(p, 1, d, parse_polynomial(eq, kXYZ), h);
}

std::string invariant_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SpecError& e) {
    return e.invariant();
  }
  return "";
}

}  // namespace

TEST_CASE("polynomial parser") {
  const IntPoly f = parse_polynomial("x^7 + 3x^5*y^2 - 2 y + 1", {"x", "y"});
  CHECK(f.coeff({7, 0}) == 1);
  CHECK(f.coeff({5, 2}) == 3);
  CHECK(f.coeff({0, 1}) == -2);
  CHECK(f.coeff({0, 0}) == 1);
  CHECK(f.size() == 4);
  const IntPoly g = parse_polynomial("y^2 = x^3 + x", {"x", "y"});
  CHECK(g.coeff({0, 2}) == 1);
  CHECK(g.coeff({3, 0}) == -1);
  CHECK(parse_polynomial("xy + yx", {"x", "y"}).coeff({1, 1}) == 2);
  CHECK(parse_polynomial("t2^2*t1", {"t1", "t2"}).coeff({1, 2}) == 1);
  CHECK_THROWS_AS(parse_polynomial("x + + y", {"x", "y"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("x + q", {"x", "y"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("", {"x"}), std::invalid_argument);
}

TEST_CASE("spec validation names the violated invariant") {
  CHECK(invariant_of([] { curve(6, 3, "x^3+y^3+z^3"); }) == "prime");
  CHECK(invariant_of([] { curve(5, 3, "x^3+y^2+z^3"); }) == "homogeneous");
  CHECK(invariant_of([] { curve(5, 3, "5x^3+10y^3"); }) == "nonzero");
  CHECK(invariant_of([] { curve(5, 3, "x^3+y^3+z^3", 3); }) == "hyperplane");
  CHECK(invariant_of([] { PairSpec::make(5, 2, 3, parse_polynomial("x^3+y^3+z^3", kXYZ)); }) == "arity");
  CHECK(invariant_of([] { PairSpec::make(5, 1, 0, parse_polynomial("1", kXYZ)); }) == "degree");
  // gcd of the weights omitting a_i must be 1.
  CHECK(invariant_of([] {
          PairSpec::make(5, 1, 4, parse_polynomial("x^2+y^2+z^4", kXYZ, std::vector<int>{2, 2, 1}), std::nullopt,
                         std::vector<int>{2, 2, 1});
        }) == "weights-gcd");
  CHECK(invariant_of([] { curve(5, 3, "x^3+y^3+z^3"); }).empty());
}

TEST_CASE("coefficients are lifted canonically into [0, p)") {
  const PairSpec s = curve(11, 2, "x^2 - y^2 + 23z^2");
  CHECK(s.Q.coeff({0, 2, 0}) == 10);
  CHECK(s.Q.coeff({0, 0, 2}) == 1);
  CHECK(s.hyperplane_index == 2);
}

TEST_CASE("charts, sections and covers") {
  const PairSpec s = curve(5, 3, "y^2z - x^3 - xz^2 - z^3", 0);
  const AffineChart c = dehomogenize(s);
  CHECK(c.variables == std::vector<size_t>{1, 2});
  CHECK_FALSE(c.degree_dropped);
  CHECK(homogenize(c, "x") == s.Q);

  const PairSpec D = hyperplane_section(s);
  CHECK(D.n == 0);
  CHECK(D.Q.arity() == 2);
  // x = 0: y^2 z - z^3 with coefficients reduced mod 5
  CHECK(D.Q.coeff({2, 1}) == 1);
  CHECK(D.Q.coeff({0, 3}) == 4);
  CHECK(invariant_of([] { hyperplane_section(curve(5, 3, "zx^2 + zy^2 + z^3")); }) == "hyperplane-section");

  const PairSpec w = fixtures::load("surface_p11");
  CHECK(w.weighted());
  const PairSpec cv = cover(w);
  CHECK_FALSE(cv.weighted());
  CHECK(cv.Q.coeff({3 * 6, 0, 0, 0}) == 10);  // −x^3 moved to the left
  CHECK(cv.Q.coeff({0, 2 * 9, 0, 0}) == 1);
  CHECK(cv.Q.is_homogeneous(18));
  // The weighted section keeps the non-trivial weights and skips the gcd condition.
  const PairSpec wd = hyperplane_section(w);
  CHECK(wd.weights == std::vector<int>{6, 9, 1});
}

TEST_CASE("linear coordinate changes") {
  const PairSpec s = curve(5, 2, "x^2 + y^2 + z^2");
  const PairSpec t = linear_change(s, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK(t.Q == s.Q);
  const PairSpec u = linear_change(s, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(u.Q.coeff({1, 1, 0}) == 2);
  CHECK_THROWS_AS(linear_change(s, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}), SpecError);
}

TEST_CASE("projective enumeration visits every class once") {
  for (long p : {2L, 3L, 5L})
    for (size_t nv : {2u, 3u, 4u}) {
      const auto F = ExtField::make(p, 1);
      std::set<std::vector<long>> seen;
      std::mutex mu;
      for_each_projective_point(nv, *F, 4, [&](size_t, const std::vector<long>& pt) {
        // first nonzero coordinate is 1
        for (long x : pt) {
          if (x == 0) continue;
          CHECK(x == 1);
          break;
        }
        std::lock_guard<std::mutex> lock(mu);
        CHECK(seen.insert(pt).second);
        return false;
      });
      CHECK(Int(static_cast<long>(seen.size())) == projective_point_count(nv, p));
    }
}

TEST_CASE("singularity probe") {
  // cuspidal cubic: singular at (0:0:1)
  const PairSpec cusp = curve(5, 3, "y^2z - x^3");
  const ProbeReport r = smoothness_probe(cusp, 1);
  REQUIRE(r.witness);
  CHECK(r.witness->m == 1);
  CHECK(r.witness->point == std::vector<long>{0, 0, 1});
  // smooth Fermat cubic; D = {x^3 + y^3 = 0} has three distinct points over F_25
  const auto reps = probe_pair(curve(5, 3, "x^3 + y^3 + z^3"), 2);
  CHECK_FALSE(reps[0].witness);
  CHECK_FALSE(reps[1].witness);
  // a node that only appears over F_{p^2}: x^2 + y^2 = 0 is a pair of conjugate lines over F_3
  const PairSpec lines = curve(3, 2, "x^2 + y^2");
  CHECK(smoothness_probe(lines, 1).witness.has_value());  // (0:0:1) is rational
  CHECK_THROWS_AS(smoothness_probe(curve(5, 3, "x^3+y^3+z^3"), 3, 1, 100), BudgetExceeded);
}

TEST_CASE("every shipped fixture except the printed degree-7 curve passes the smoothness probe") {
  for (const auto& name : fixtures::all_fixtures()) {
    CAPTURE(name);
    if (name == "curve7_p5") continue;
    const PairSpec s = fixtures::load(name);
    for (const auto& r : probe_pair(s, 1, 4)) CHECK_FALSE(r.witness);
  }
}

TEST_CASE("spec documents round-trip") {
  for (const auto& name : fixtures::all_fixtures()) {
    CAPTURE(name);
    const PairSpec s = fixtures::load(name);
    const std::string text = serialize_spec(s);
    const PairSpec t = parse_spec(text);
    CHECK(t == s);
    CHECK(serialize_spec(t) == text);
  }
  CHECK_THROWS_AS(parse_spec("{not json"), SpecError);
  CHECK_THROWS_AS(parse_spec(R"({"p": 5, "n": 1, "d": 3})"), SpecError);
  CHECK_THROWS_AS(parse_spec(R"({"p": 5, "n": 1, "d": 3, "terms": [[[1, 1], 1]]})"), SpecError);
  CHECK_THROWS_AS(parse_spec(R"({"p": 5, "n": 1, "d": 3, "variables": ["x","y","z"], "equation": "x^3 + w"})"), SpecError);
  // big coefficients are written as strings and reduced mod p
  const PairSpec big = parse_spec(
      R"({"p": 5, "n": 1, "d": 1, "variables": ["x","y","z"], "terms": [[[1,0,0], "100000000000000000000001"], [[0,1,0], 1]]})");
  CHECK(big.Q.coeff({1, 0, 0}) == 1);
}

TEST_CASE("the printed degree-7 curve has a singular point over F_5") {
  const PairSpec s = fixtures::load("curve7_p5");
  const ProbeReport r = smoothness_probe(s, 1);
  REQUIRE(r.witness);
  CHECK(r.witness->point == std::vector<long>{1, 1, 3});
  // The section D = {z = 0} itself is reduced.
  CHECK_FALSE(smoothness_probe(hyperplane_section(s), 2).witness);
}
