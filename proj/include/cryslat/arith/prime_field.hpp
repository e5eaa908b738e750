#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cryslat/arith/integer.hpp"

namespace cryslat {

/// Element of F_p. The modulus travels with the value; mixing moduli throws.
class PrimeFieldElem {
 public:
  /// Verifies that p is prime.
  PrimeFieldElem(long long value, long p);

  long value() const { return value_; }
  long modulus() const { return p_; }

  PrimeFieldElem operator+(const PrimeFieldElem& o) const;
  PrimeFieldElem operator-(const PrimeFieldElem& o) const;
  PrimeFieldElem operator*(const PrimeFieldElem& o) const;
  PrimeFieldElem operator-() const;
  PrimeFieldElem& operator+=(const PrimeFieldElem& o) { return *this = *this + o; }
  PrimeFieldElem& operator-=(const PrimeFieldElem& o) { return *this = *this - o; }
  PrimeFieldElem& operator*=(const PrimeFieldElem& o) { return *this = *this * o; }
  PrimeFieldElem inverse() const;
  PrimeFieldElem pow(unsigned long e) const;
  bool is_zero() const { return value_ == 0; }

  bool operator==(const PrimeFieldElem& o) const { return p_ == o.p_ && value_ == o.value_; }

  /// Construction without the primality check, for callers that already validated p.
  static PrimeFieldElem unchecked(long value, long p);

 private:
  PrimeFieldElem() = default;
  void check(const PrimeFieldElem& o) const;
  long value_ = 0;
  long p_ = 2;
};

std::ostream& operator<<(std::ostream& os, const PrimeFieldElem& x);

/// Dense univariate polynomial over F_p, coefficients low degree first,
/// always trimmed (no trailing zeros; the zero polynomial is empty).
struct FpPoly {
  long p = 2;
  std::vector<long> c;

  FpPoly() = default;
  FpPoly(long p_, std::vector<long> coeffs);
  static FpPoly x_pow(long p, int e);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  long lead() const { return c.empty() ? 0 : c.back(); }
  void trim();

  bool operator==(const FpPoly& o) const { return p == o.p && c == o.c; }
};

FpPoly operator+(const FpPoly& a, const FpPoly& b);
FpPoly operator-(const FpPoly& a, const FpPoly& b);
FpPoly operator*(const FpPoly& a, const FpPoly& b);
/// Quotient and remainder; b must be nonzero.
void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
FpPoly monic(const FpPoly& a);
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly derivative(const FpPoly& a);
/// base^e mod m.
FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& m);
FpPoly compose_mod(const FpPoly& f, const FpPoly& g, const FpPoly& m);

/// Ben-Or test: f (degree m >= 1) is irreducible iff gcd(f, x^{p^i} - x) = 1
/// for every i <= m/2.
bool is_irreducible(const FpPoly& f);

/// First monic irreducible of degree m when candidates x^m + sum c_i x^i are
/// enumerated by the integer sum c_i p^i, counting up from zero.
FpPoly find_irreducible(long p, int m);

/// Degrees of the irreducible factors of a squarefree polynomial (distinct
/// degree factorisation), with multiplicity, sorted ascending.
std::vector<int> factor_degrees(const FpPoly& f);
bool is_squarefree(const FpPoly& f);

}  // namespace cryslat
