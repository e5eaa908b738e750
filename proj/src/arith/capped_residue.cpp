#include "cryslat/arith/capped_residue.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cryslat {

CappedResidue::CappedResidue(const Int& value, long cap, long p) : cap_(cap), p_(p) {
  require_prime(p);
  if (cap < 1) throw std::invalid_argument("CappedResidue: cap must be positive");
  modulus_ = ipow(p, static_cast<unsigned long>(cap));
  mpz_fdiv_r(value_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

Valuation CappedResidue::valuation() const {
  if (value_ == 0) return Valuation::lower_bound(cap_);
  return cryslat::valuation(value_, p_);
}

bool CappedResidue::is_unit() const { return mpz_divisible_ui_p(value_.get_mpz_t(), static_cast<unsigned long>(p_)) == 0; }

CappedResidue CappedResidue::binary(const CappedResidue& o, const Int& raw) const {
  if (p_ != o.p_) throw std::invalid_argument("CappedResidue: mismatched primes");
  CappedResidue r;
  r.p_ = p_;
  if (cap_ <= o.cap_) {
    r.cap_ = cap_;
    r.modulus_ = modulus_;
  } else {
    r.cap_ = o.cap_;
    r.modulus_ = o.modulus_;
  }
  mpz_fdiv_r(r.value_.get_mpz_t(), raw.get_mpz_t(), r.modulus_.get_mpz_t());
  return r;
}

CappedResidue CappedResidue::operator+(const CappedResidue& o) const { return binary(o, value_ + o.value_); }
CappedResidue CappedResidue::operator-(const CappedResidue& o) const { return binary(o, value_ - o.value_); }
CappedResidue CappedResidue::operator*(const CappedResidue& o) const { return binary(o, value_ * o.value_); }

CappedResidue CappedResidue::operator-() const {
  CappedResidue r = *this;
  if (r.value_ != 0) r.value_ = modulus_ - value_;
  return r;
}

CappedResidue CappedResidue::inverse() const {
  if (!is_unit()) throw std::domain_error("CappedResidue: inverse of a non-unit");
  CappedResidue r = *this;
  mpz_invert(r.value_.get_mpz_t(), value_.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

CappedResidue CappedResidue::truncate(long cap) const {
  if (cap > cap_) throw std::invalid_argument("CappedResidue: cannot widen the cap");
  return CappedResidue(value_, cap, p_);
}

Valuation valuation(const CappedResidue& x) { return x.valuation(); }

std::ostream& operator<<(std::ostream& os, const CappedResidue& x) {
  return os << x.value().get_str() << " (mod " << x.prime() << "^" << x.cap() << ")";
}

}  // namespace cryslat
