#pragma once

#include <iosfwd>

#include "cryslat/arith/integer.hpp"

namespace cryslat {

/// A residue modulo p^N that remembers N. Mixing caps truncates to the
/// smaller one, so a result is never claimed to be more precise than its
/// least precise input.
class CappedResidue {
 public:
  CappedResidue(const Int& value, long cap, long p);

  const Int& value() const { return value_; }
  long cap() const { return cap_; }
  long prime() const { return p_; }
  const Int& modulus() const { return modulus_; }

  /// min(ord_p(value), N); flagged "at least N" when value == 0 mod p^N.
  Valuation valuation() const;
  bool is_zero() const { return value_ == 0; }
  bool is_unit() const;

  CappedResidue operator+(const CappedResidue& o) const;
  CappedResidue operator-(const CappedResidue& o) const;
  CappedResidue operator*(const CappedResidue& o) const;
  CappedResidue operator-() const;
  CappedResidue& operator+=(const CappedResidue& o) { return *this = *this + o; }
  CappedResidue& operator-=(const CappedResidue& o) { return *this = *this - o; }
  CappedResidue& operator*=(const CappedResidue& o) { return *this = *this * o; }
  /// Inverse of a unit; throws std::domain_error otherwise.
  CappedResidue inverse() const;
  /// Same residue at a smaller cap.
  CappedResidue truncate(long cap) const;

  bool operator==(const CappedResidue& o) const { return p_ == o.p_ && cap_ == o.cap_ && value_ == o.value_; }

 private:
  CappedResidue() = default;
  CappedResidue binary(const CappedResidue& o, const Int& raw) const;
  Int value_;
  long cap_ = 1;
  long p_ = 2;
  Int modulus_;
};

Valuation valuation(const CappedResidue& x);
std::ostream& operator<<(std::ostream& os, const CappedResidue& x);

}  // namespace cryslat
