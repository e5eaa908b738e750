#include "cryslat/arith/local_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace cryslat {

namespace {
bool divisible(const Int& x, long p) { return mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p)) != 0; }
}  // namespace

LocalRational::LocalRational(const Int& num, const Int& den, long p) : p_(p) {
  require_prime(p);
  if (den == 0) throw std::domain_error("LocalRational: zero denominator");
  value_ = Rat(num, den);
  value_.canonicalize();
  if (divisible(value_.get_den(), p))
    throw std::domain_error("LocalRational: denominator has positive " + std::to_string(p) + "-adic valuation");
}

LocalRational::LocalRational(const Rat& value, long p) : LocalRational(value.get_num(), value.get_den(), p) {}

LocalRational::LocalRational(long long value, long p) : LocalRational(Int(static_cast<long>(value)), Int(1), p) {}

void LocalRational::check(const LocalRational& o) const {
  if (p_ != o.p_) throw std::invalid_argument("LocalRational: mismatched primes");
}

bool LocalRational::is_unit() const { return !is_zero() && !divisible(value_.get_num(), p_); }

Valuation LocalRational::valuation() const { return cryslat::valuation(value_.get_num(), p_); }

LocalRational LocalRational::operator+(const LocalRational& o) const {
  check(o);
  return LocalRational(value_ + o.value_, p_, Unchecked{});
}

LocalRational LocalRational::operator-(const LocalRational& o) const {
  check(o);
  return LocalRational(value_ - o.value_, p_, Unchecked{});
}

LocalRational LocalRational::operator*(const LocalRational& o) const {
  check(o);
  return LocalRational(value_ * o.value_, p_, Unchecked{});
}

LocalRational LocalRational::operator-() const { return LocalRational(-value_, p_, Unchecked{}); }

LocalRational LocalRational::divide(const LocalRational& o) const {
  check(o);
  if (o.is_zero()) throw std::domain_error("LocalRational: division by zero");
  return LocalRational(Rat(value_ / o.value_), p_);
}

Valuation valuation(const LocalRational& x) { return x.valuation(); }

std::ostream& operator<<(std::ostream& os, const LocalRational& x) { return os << x.value().get_str(); }

}  // namespace cryslat
