#include "cryslat/arith/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace cryslat {

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite || b.infinite) return Valuation::inf();
  return {false, a.value + b.value, a.at_least || b.at_least};
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  if (v.infinite) return os << "+inf";
  if (v.at_least) os << ">=";
  return os << v.value;
}

Valuation valuation(const Int& x, long p) {
  if (x == 0) return Valuation::inf();
  long e = 0;
  Int y = x;
  while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(p));
    ++e;
  }
  return Valuation::exact(e);
}

Valuation valuation(long long x, long p) { return valuation(Int(static_cast<long>(x)), p); }

long rational_valuation(const Rat& x, long p) {
  if (x == 0) throw std::domain_error("rational_valuation: zero has infinite valuation");
  return valuation(x.get_num(), p).value - valuation(x.get_den(), p).value;
}

Int strip_p(const Int& x, long p, long* exponent) {
  long e = 0;
  Int y = x;
  if (y != 0) {
    while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
      mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(p));
      ++e;
    }
  }
  if (exponent) *exponent = e;
  return y;
}

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

void require_prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int ipow(long base, unsigned long e) { return ipow(Int(base), e); }

long floor_log(long base, long x) {
  if (base < 2 || x < 1) throw std::invalid_argument("floor_log: need base >= 2 and x >= 1");
  long r = 0;
  Int acc = base;
  while (acc <= x) {
    acc *= base;
    ++r;
  }
  return r;
}

long mod_floor(long long x, long m) {
  long long r = x % m;
  return static_cast<long>(r < 0 ? r + m : r);
}

long inverse_mod(long a, long m) {
  Int r;
  Int aa = mod_floor(a, m);
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), Int(m).get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: element is not invertible");
  return r.get_si();
}

std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace cryslat
