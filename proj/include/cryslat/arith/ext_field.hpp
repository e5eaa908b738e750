#pragma once

#include <memory>
#include <vector>

#include "cryslat/arith/prime_field.hpp"

namespace cryslat {

/// The field F_{p^m} = F_p[x]/(f) for a monic irreducible f of degree m.
///
/// Elements are addressed by their index sum c_i p^i in [0, q). For q up to
/// 2^20 log/antilog tables make multiplication a table lookup; larger fields
/// fall back to polynomial arithmetic.
class ExtField {
 public:
  /// Uses find_irreducible(p, m).
  static std::shared_ptr<const ExtField> make(long p, int m);
  /// Verifies irreducibility of `modulus`.
  static std::shared_ptr<const ExtField> make(const FpPoly& modulus);

  long p() const { return p_; }
  int degree() const { return m_; }
  long order() const { return q_; }
  const FpPoly& modulus() const { return modulus_; }

  long add(long a, long b) const;
  long sub(long a, long b) const;
  long neg(long a) const;
  long mul(long a, long b) const;
  long inv(long a) const;
  long pow(long a, unsigned long e) const;
  /// Image of an integer under Z -> F_p -> F_q.
  long from_int(long long v) const { return mod_floor(v, p_); }

  std::vector<long> digits(long a) const;
  long from_digits(const std::vector<long>& d) const;

 private:
  ExtField(FpPoly modulus);
  long mul_slow(long a, long b) const;

  long p_;
  int m_;
  long q_;
  FpPoly modulus_;
  std::vector<long> pw_;  // p^i
  std::vector<int> log_, exp_;
};

/// A single element of F_{p^m}, carrying its field.
class ExtFieldElem {
 public:
  ExtFieldElem(std::shared_ptr<const ExtField> field, long index);
  static ExtFieldElem from_coeffs(std::shared_ptr<const ExtField> field, const std::vector<PrimeFieldElem>& coeffs);

  const std::shared_ptr<const ExtField>& field() const { return field_; }
  long index() const { return index_; }
  std::vector<PrimeFieldElem> coeffs() const;
  const FpPoly& modulus() const { return field_->modulus(); }

  ExtFieldElem operator+(const ExtFieldElem& o) const;
  ExtFieldElem operator-(const ExtFieldElem& o) const;
  ExtFieldElem operator*(const ExtFieldElem& o) const;
  ExtFieldElem operator-() const;
  ExtFieldElem& operator+=(const ExtFieldElem& o) { return *this = *this + o; }
  ExtFieldElem& operator-=(const ExtFieldElem& o) { return *this = *this - o; }
  ExtFieldElem& operator*=(const ExtFieldElem& o) { return *this = *this * o; }
  ExtFieldElem inverse() const;
  bool is_zero() const { return index_ == 0; }
  bool operator==(const ExtFieldElem& o) const;

 private:
  void check(const ExtFieldElem& o) const;
  std::shared_ptr<const ExtField> field_;
  long index_;
};

}  // namespace cryslat
