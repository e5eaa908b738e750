#pragma once

#include <iosfwd>

#include "cryslat/arith/integer.hpp"

namespace cryslat {

/// An element of the localisation Z_(p): a reduced fraction whose denominator
/// is prime to p.
class LocalRational {
 public:
  /// Throws std::domain_error when the reduced denominator is divisible by p.
  LocalRational(const Int& num, const Int& den, long p);
  LocalRational(const Rat& value, long p);
  LocalRational(long long value, long p);

  const Int& numerator() const { return value_.get_num(); }
  const Int& denominator() const { return value_.get_den(); }
  const Rat& value() const { return value_; }
  long prime() const { return p_; }

  bool is_zero() const { return value_ == 0; }
  bool is_unit() const;
  /// ord_p; +inf for zero.
  Valuation valuation() const;

  LocalRational operator+(const LocalRational& o) const;
  LocalRational operator-(const LocalRational& o) const;
  LocalRational operator*(const LocalRational& o) const;
  LocalRational operator-() const;
  LocalRational& operator+=(const LocalRational& o) { return *this = *this + o; }
  LocalRational& operator-=(const LocalRational& o) { return *this = *this - o; }
  LocalRational& operator*=(const LocalRational& o) { return *this = *this * o; }
  /// Exact quotient; throws std::domain_error unless it lies in Z_(p).
  LocalRational divide(const LocalRational& o) const;
  LocalRational inverse() const { return LocalRational(1, p_).divide(*this); }

  bool operator==(const LocalRational& o) const { return p_ == o.p_ && value_ == o.value_; }

 private:
  struct Unchecked {};
  LocalRational(Rat value, long p, Unchecked) : value_(std::move(value)), p_(p) {}
  void check(const LocalRational& o) const;
  Rat value_;
  long p_;
};

Valuation valuation(const LocalRational& x);
std::ostream& operator<<(std::ostream& os, const LocalRational& x);

}  // namespace cryslat
