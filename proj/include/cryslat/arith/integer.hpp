#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cryslat {

using Int = mpz_class;
using Rat = mpq_class;

/// p-adic valuation of an exact or capped quantity.
///
/// `infinite` marks an exact zero. For capped residues that vanish modulo
/// p^N the value is N and `at_least` is set: the true valuation is only known
/// to be >= N.
struct Valuation {
  bool infinite = false;
  long value = 0;
  bool at_least = false;

  static Valuation exact(long v) { return {false, v, false}; }
  static Valuation inf() { return {true, 0, false}; }
  static Valuation lower_bound(long v) { return {false, v, true}; }

  bool operator==(const Valuation&) const = default;
};

/// Valuation of a product: exact parts add, "at least" propagates.
Valuation operator+(const Valuation& a, const Valuation& b);
std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// ord_p of a nonzero integer; +inf for zero.
Valuation valuation(const Int& x, long p);
Valuation valuation(long long x, long p);
/// ord_p(num) - ord_p(den) of a rational; +inf for zero.
long rational_valuation(const Rat& x, long p);

/// Strips the p-part: returns x / p^ord_p(x) and stores the exponent.
Int strip_p(const Int& x, long p, long* exponent = nullptr);

bool is_prime(long n);
void require_prime(long p);

Int ipow(const Int& base, unsigned long e);
Int ipow(long base, unsigned long e);

/// floor(log_base(x)) for x >= 1, base >= 2, in exact integer arithmetic.
long floor_log(long base, long x);

/// Least non-negative residue of x modulo m (m > 0).
long mod_floor(long long x, long m);
long inverse_mod(long a, long m);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);

}  // namespace cryslat
