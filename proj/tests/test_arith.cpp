#include <random>

#include "cryslat/arith/echelon.hpp"
#include "cryslat/arith/sparse_poly.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cryslat;

namespace {

constexpr int kTriples = 10000;

template <class R, class Gen>
void check_ring_axioms(Gen gen) {
  for (int t = 0; t < kTriples; ++t) {
    const R a = gen(), b = gen(), c = gen();
    REQUIRE(((a + b) + c) == (a + (b + c)));
    REQUIRE(((a * b) * c) == (a * (b * c)));
    REQUIRE((a * (b + c)) == (a * b + a * c));
    REQUIRE((a + b) == (b + a));
    REQUIRE((a * b) == (b * a));
    REQUIRE(((a - b) + b) == a);
  }
}

// All monic polynomials of degree exactly m over F_p.
std::vector<FpPoly> monics(long p, int m) {
  std::vector<FpPoly> out;
  long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (long idx = 0; idx < count; ++idx) {
    std::vector<long> c(static_cast<size_t>(m) + 1);
    long t = idx;
    for (int i = 0; i < m; ++i) {
      c[static_cast<size_t>(i)] = t % p;
      t /= p;
    }
    c.back() = 1;
    out.emplace_back(p, c);
  }
  return out;
}

bool brute_irreducible(const FpPoly& f) {
  for (int d = 1; d <= f.degree() / 2; ++d)
    for (const auto& g : monics(f.p, d))
      if ((f % g).is_zero()) return false;
  return f.degree() >= 1;
}

}  // namespace

TEST_CASE("valuations of integers and local rationals") {
  CHECK(valuation(Int(50), 5) == Valuation::exact(2));
  CHECK(valuation(Int(0), 7).infinite);
  CHECK_THROWS_AS(LocalRational(Int(6), Int(35), 5), std::domain_error);
  CHECK(LocalRational(Int(50), Int(3), 5).valuation() == Valuation::exact(2));
  CHECK(LocalRational(0, 5).valuation().infinite);
  CHECK_THROWS_AS(PrimeFieldElem(3, 6), std::invalid_argument);
}

TEST_CASE("capped residues track their cap") {
  const CappedResidue a(Int(25), 3, 5), b(Int(10), 2, 5);
  CHECK(a.valuation() == Valuation::exact(2));
  const auto s = a + b;
  CHECK(s.cap() == 2);
  CHECK(s.value() == 10);
  const auto z = a * CappedResidue(Int(5), 3, 5);
  CHECK(z.is_zero());
  CHECK(z.valuation() == Valuation::lower_bound(3));
  CHECK_THROWS_AS(CappedResidue(Int(5), 3, 5).inverse(), std::domain_error);
  CHECK((CappedResidue(Int(7), 4, 5) * CappedResidue(Int(7), 4, 5).inverse()).value() == 1);
}

TEST_CASE("ring axioms hold on random triples") {
  std::mt19937_64 rng(1);
  SUBCASE("F_p") {
    check_ring_axioms<PrimeFieldElem>([&] { return PrimeFieldElem::unchecked(static_cast<long>(rng() % 101), 101); });
  }
  SUBCASE("F_{p^m}") {
    auto F = ExtField::make(3, 4);
    check_ring_axioms<ExtFieldElem>([&] { return ExtFieldElem(F, static_cast<long>(rng() % 81)); });
    auto G = ExtField::make(2, 21);  // beyond the table limit: polynomial arithmetic
    check_ring_axioms<ExtFieldElem>([&] { return ExtFieldElem(G, static_cast<long>(rng() % G->order())); });
  }
  SUBCASE("Z_(p)") {
    check_ring_axioms<LocalRational>([&] {
      long den = 1 + static_cast<long>(rng() % 40);
      if (den % 5 == 0) ++den;
      return LocalRational(Int(static_cast<long>(rng() % 2001) - 1000), Int(den), 5);
    });
  }
  SUBCASE("Z/p^N") {
    check_ring_axioms<CappedResidue>([&] { return CappedResidue(Int(static_cast<long>(rng() % 100000)), 6, 7); });
  }
}

TEST_CASE("valuation is additive on products") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < kTriples; ++t) {
    const LocalRational a(Int(static_cast<long>(rng() % 5000) - 2500), Int(1 + 5 * static_cast<long>(rng() % 9) + 1), 5);
    const LocalRational b(Int(static_cast<long>(rng() % 5000) - 2500), Int(3), 5);
    REQUIRE((a * b).valuation() == (a.valuation() + b.valuation()));
    const CappedResidue x(Int(static_cast<long>(rng() % 100000)), 5, 3), y(Int(static_cast<long>(rng() % 100000)), 5, 3);
    const Valuation vx = x.valuation(), vy = y.valuation(), vxy = (x * y).valuation();
    const long sum = vx.value + vy.value;
    if (sum >= 5 || vx.at_least || vy.at_least) {
      REQUIRE(vxy.at_least);
      REQUIRE(vxy.value == 5);
    } else {
      REQUIRE(vxy == Valuation::exact(sum));
    }
  }
}

TEST_CASE("extension field inverses and element construction") {
  auto F = ExtField::make(5, 3);
  CHECK(F->order() == 125);
  for (long a = 1; a < 125; ++a) {
    const ExtFieldElem x(F, a);
    REQUIRE((x * x.inverse()).index() == 1);
  }
  const auto x = ExtFieldElem::from_coeffs(F, {PrimeFieldElem(1, 5), PrimeFieldElem(2, 5), PrimeFieldElem(3, 5)});
  CHECK(x.coeffs()[1].value() == 2);
  CHECK_THROWS(ExtFieldElem::from_coeffs(F, {PrimeFieldElem(1, 5)}));
  CHECK_THROWS(ExtField::make(FpPoly(5, {1, 0, 1})));  // x^2+1 = (x-2)(x+2) over F_5
  auto G = ExtField::make(7, 1);
  CHECK_THROWS(ExtFieldElem(F, 1) + ExtFieldElem(G, 1));
}

TEST_CASE("irreducible polynomial search") {
  CHECK(find_irreducible(5, 1).degree() == 1);
  CHECK(find_irreducible(2, 2) == FpPoly(2, {1, 1, 1}));
  const FpPoly f = find_irreducible(5, 3);
  CHECK(brute_irreducible(f));
  // It is the first irreducible cubic in the search order.
  for (const auto& g : monics(5, 3)) {
    if (g == f) break;
    CHECK_FALSE(brute_irreducible(g));
  }
  SUBCASE("Ben-Or test agrees with exhaustive trial division") {
    for (long p : {2L, 3L})
      for (int m = 1; m <= 5; ++m)
        for (const auto& g : monics(p, m)) REQUIRE(is_irreducible(g) == brute_irreducible(g));
  }
}

TEST_CASE("distinct-degree factorisation") {
  const FpPoly a(5, {2, 0, 1});                // x^2+2, irreducible mod 5
  const FpPoly b(5, {1, 1});                   // x+1
  const FpPoly c(5, {3, 1});                   // x+3
  const FpPoly e = find_irreducible(5, 3);
  CHECK(factor_degrees(a * b * c * e) == std::vector<int>{1, 1, 2, 3});
  CHECK_THROWS_AS(factor_degrees(a * a), std::domain_error);
  CHECK(factor_degrees(FpPoly(5, {4})).empty());
}

TEST_CASE("characteristic polynomial") {
  SUBCASE("zero matrix") {
    ExactMatrix<Int> z(3, 3, Int(0));
    CHECK(char_poly(z) == std::vector<Int>{1, 0, 0, 0});
  }
  SUBCASE("diagonal") {
    auto m = ExactMatrix<Int>::from_dense({{2, 0}, {0, 3}}, 0);
    CHECK(char_poly(m) == std::vector<Int>{1, -5, 6});
  }
  SUBCASE("random matrices modulo 5^8 against cofactor expansion") {
    std::mt19937_64 rng(3);
    const CappedResidue zero(Int(0), 8, 5);
    for (int trial = 0; trial < 20; ++trial) {
      ExactMatrix<CappedResidue> M(5, 5, zero);
      for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) M.set(i, j, CappedResidue(Int(static_cast<long>(rng() % 390625)), 8, 5));
      const auto cp = char_poly(M);
      REQUIRE(cp.size() == 6);
      CHECK(cp[0].value() == 1);
      CHECK(cp[1] == -M.trace());
      // det(1 - M T) at T = t for six sample points determines the polynomial.
      for (long t = 0; t < 6; ++t) {
        std::vector<std::vector<CappedResidue>> a(5, std::vector<CappedResidue>(5, zero));
        for (size_t i = 0; i < 5; ++i)
          for (size_t j = 0; j < 5; ++j)
            a[i][j] = CappedResidue(Int(i == j ? 1 : 0), 8, 5) - M.at(i, j) * CappedResidue(Int(t), 8, 5);
        const auto det = oracle::cofactor_det(a, zero, CappedResidue(Int(1), 8, 5));
        CappedResidue ev = zero, pw(Int(1), 8, 5);
        for (const auto& c : cp) {
          ev += c * pw;
          pw *= CappedResidue(Int(t), 8, 5);
        }
        REQUIRE(ev == det);
      }
    }
  }
  SUBCASE("a_1 = -trace over F_{p^m}") {
    auto F = ExtField::make(3, 2);
    std::mt19937_64 rng(4);
    ExactMatrix<ExtFieldElem> M(4, 4, ExtFieldElem(F, 0));
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) M.set(i, j, ExtFieldElem(F, static_cast<long>(rng() % 9)));
    const auto cp = char_poly(M);
    CHECK(cp[1] == -M.trace());
    CHECK(cp[0].index() == 1);
  }
}

TEST_CASE("unit-pivot echelon form") {
  const LocalRational zero(0, 5);
  auto L = [](long x) { return LocalRational(x, 5); };
  SUBCASE("prefers unit pivots") {
    auto M = ExactMatrix<LocalRational>::from_dense({{L(5), L(1)}, {L(1), L(0)}}, zero);
    const auto e = echelonize_unit_pivot(M);
    CHECK(e.ledger == 0);
    CHECK(e.pivot_valuations == std::vector<long>{0, 0});
    CHECK(e.pivot_columns == std::vector<size_t>{0, 1});
    CHECK(e.transform * M == e.form);
    // The transform is unimodular over Z_(5).
    std::vector<std::vector<Rat>> t(2, std::vector<Rat>(2));
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j) t[i][j] = e.transform.at(i, j).value();
    CHECK(rational_valuation(t[0][0] * t[1][1] - t[0][1] * t[1][0], 5) == 0);
  }
  SUBCASE("identity") {
    const auto I = ExactMatrix<LocalRational>::identity(4, zero);
    const auto e = echelonize_unit_pivot(I);
    CHECK(e.form == I);
    CHECK(e.ledger == 0);
  }
  SUBCASE("pivot valuations are the elementary divisors") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::vector<Int>> a(6, std::vector<Int>(6));
      ExactMatrix<LocalRational> M(6, 6, zero);
      for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
          // Bias towards multiples of 5 so that non-trivial divisors appear.
          long x = static_cast<long>(rng() % 11) - 5;
          if (rng() % 3 != 0) x *= 5;
          if (rng() % 4 == 0) x *= 25;
          a[i][j] = x;
          M.set(i, j, L(x));
        }
      const auto e = echelonize_unit_pivot(M);
      auto got = e.pivot_valuations;
      std::sort(got.begin(), got.end());
      REQUIRE(got == oracle::snf_valuations_by_minors(a, 5));
      REQUIRE(e.transform * M == e.form);
      long sum = 0;
      for (long v : got) sum += v;
      REQUIRE(e.ledger == sum);
    }
  }
}

TEST_CASE("lattice quotient basis") {
  SUBCASE("saturation removes p-torsion") {
    const auto b = lattice_quotient_basis({{1, 0}, {0, 1}}, {{5, 0}}, 5);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == std::vector<Rat>{0, 1});
  }
  SUBCASE("units are invisible") {
    const auto b = lattice_quotient_basis({{1, 0}, {0, 1}}, {{2, 0}}, 5);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == std::vector<Rat>{0, 1});
  }
  SUBCASE("arity mismatch") { CHECK_THROWS_AS(lattice_quotient_basis({{1, 0}}, {{1, 0, 0}}, 5), std::invalid_argument); }
  SUBCASE("random quotients agree with rational linear algebra") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::vector<Rat>> amb, sub;
      for (int i = 0; i < 8; ++i) {
        std::vector<Rat> v(8);
        for (auto& x : v) x = Rat(static_cast<long>(rng() % 11) - 5);
        amb.push_back(v);
      }
      for (int i = 0; i < 3; ++i) {
        std::vector<Rat> v(8);
        for (auto& x : v) x = Rat(5 * (static_cast<long>(rng() % 7) - 3) + (rng() % 2 ? 0 : 1));
        sub.push_back(v);
      }
      const auto basis = lattice_quotient_basis(amb, sub, 5);
      const size_t rs = oracle::rational_rank(sub);
      auto both = amb;
      both.insert(both.end(), sub.begin(), sub.end());
      REQUIRE(basis.size() == oracle::rational_rank(both) - rs);
      // Same Q-quotient: basis + sub spans amb + sub, and basis is independent mod sub.
      auto bs = basis;
      bs.insert(bs.end(), sub.begin(), sub.end());
      REQUIRE(oracle::rational_rank(bs) == basis.size() + rs);
      auto all = bs;
      all.insert(all.end(), amb.begin(), amb.end());
      REQUIRE(oracle::rational_rank(all) == oracle::rational_rank(bs));
      // Integrality: each ambient generator reduces to Z_(p)-coordinates
      // modulo the saturated sub-span.
      SaturatedEchelon sat(8, 5);
      std::vector<SparseRow> rows;
      for (const auto& v : sub) {
        std::vector<std::pair<uint32_t, Int>> pr;
        for (uint32_t j = 0; j < 8; ++j) pr.emplace_back(j, Int(v[j]));
        rows.push_back(SparseRow::from_pairs(pr));
      }
      sat.build(rows);
      for (const auto& v : amb) {
        std::vector<std::pair<uint32_t, Int>> pr;
        for (uint32_t j = 0; j < 8; ++j) pr.emplace_back(j, Int(v[j]));
        REQUIRE(sat.reduce(SparseRow::from_pairs(pr)).torsion_exponent == 0);
      }
    }
  }
}

TEST_CASE("saturated elimination is deterministic across thread counts") {
  std::mt19937_64 rng(7);
  std::vector<SparseRow> rows;
  for (int i = 0; i < 300; ++i) {
    std::vector<std::pair<uint32_t, Int>> pr;
    for (int t = 0; t < 6; ++t) pr.emplace_back(static_cast<uint32_t>(rng() % 120), Int(static_cast<long>(rng() % 50) - 25));
    rows.push_back(SparseRow::from_pairs(pr));
  }
  SaturatedEchelon a(120, 7), b(120, 7);
  a.build(rows, 1);
  b.build(rows, 4);
  CHECK(a.pivot_columns() == b.pivot_columns());
  for (size_t i = 0; i < a.rank(); ++i) {
    CHECK(a.pivot_rows()[i].col == b.pivot_rows()[i].col);
    CHECK(a.pivot_rows()[i].val == b.pivot_rows()[i].val);
  }
}

TEST_CASE("sparse polynomials") {
  IntPoly q({"X", "Y", "Z"});
  q.add_term({3, 0, 0}, 1);
  q.add_term({0, 3, 0}, 1);
  q.add_term({0, 0, 3}, 1);
  CHECK(q.is_homogeneous(3));
  const auto aff = q.eliminate_variable(2, Int(1));
  CHECK(aff.degree() == 3);
  CHECK(aff.coeff({0, 0}) == 1);
  CHECK(aff.homogenize(2, "Z", 3) == q);
  CHECK(q.derivative(0).coeff({2, 0, 0}) == 3);
  CHECK(monomials_up_to(2, 3).size() == 10);
  CHECK(monomials_of_degree(3, 2).size() == 6);
  IntPoly w({"x", "y"}, std::vector<int>{2, 3});
  w.add_term({3, 0}, 1);
  w.add_term({0, 2}, -1);
  CHECK(w.is_homogeneous(6));
  CHECK_THROWS(IntPoly({"x"}, std::vector<int>{0}));
  const auto prod = (q + q) * q;
  CHECK(prod.coeff({6, 0, 0}) == 2);
  CHECK((q - q).is_zero());
}

TEST_CASE("sigma-twisted powers") {
  auto M = ExactMatrix<Int>::from_dense({{1, 2}, {3, 4}}, 0);
  std::function<Int(const Int&)> id = [](const Int& x) { return x; };
  CHECK(sigma_twisted_power(M, id, 1) == M);
  CHECK(sigma_twisted_power(M, id, 3) == M * M * M);
}
