#include "cryslat/arith/ext_field.hpp"

#include <stdexcept>

namespace cryslat {

namespace {
constexpr long kTableLimit = 1L << 20;
}

std::shared_ptr<const ExtField> ExtField::make(long p, int m) {
  return std::shared_ptr<const ExtField>(new ExtField(find_irreducible(p, m)));
}

std::shared_ptr<const ExtField> ExtField::make(const FpPoly& modulus) {
  require_prime(modulus.p);
  if (modulus.lead() != 1) throw std::invalid_argument("ExtField: modulus must be monic");
  if (!is_irreducible(modulus)) throw std::invalid_argument("ExtField: modulus is not irreducible");
  return std::shared_ptr<const ExtField>(new ExtField(modulus));
}

ExtField::ExtField(FpPoly modulus) : p_(modulus.p), m_(modulus.degree()), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < m_; ++i) {
    pw_.push_back(q_);
    if (q_ > (1L << 40) / p_) throw std::invalid_argument("ExtField: field too large");
    q_ *= p_;
  }
  if (q_ > kTableLimit) return;
  // Find a generator of the multiplicative group by brute force.
  log_.assign(static_cast<size_t>(q_), -1);
  exp_.assign(static_cast<size_t>(q_ - 1), 0);
  for (long g = 1; g < q_; ++g) {
    std::fill(log_.begin(), log_.end(), -1);
    long x = 1;
    long k = 0;
    for (; k < q_ - 1; ++k) {
      if (log_[static_cast<size_t>(x)] != -1) break;
      log_[static_cast<size_t>(x)] = static_cast<int>(k);
      exp_[static_cast<size_t>(k)] = static_cast<int>(x);
      x = mul_slow(x, g);
    }
    if (k == q_ - 1 && x == 1) return;
  }
  throw std::logic_error("ExtField: no multiplicative generator found");
}

std::vector<long> ExtField::digits(long a) const {
  std::vector<long> d(static_cast<size_t>(m_));
  for (int i = 0; i < m_; ++i) {
    d[static_cast<size_t>(i)] = a % p_;
    a /= p_;
  }
  return d;
}

long ExtField::from_digits(const std::vector<long>& d) const {
  long a = 0;
  for (int i = m_; i-- > 0;) a = a * p_ + (static_cast<size_t>(i) < d.size() ? mod_floor(d[static_cast<size_t>(i)], p_) : 0);
  return a;
}

long ExtField::add(long a, long b) const {
  if (m_ == 1) {
    long s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  long r = 0;
  for (int i = 0; i < m_; ++i) {
    long s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * pw_[static_cast<size_t>(i)];
    a /= p_;
    b /= p_;
  }
  return r;
}

long ExtField::neg(long a) const {
  long r = 0;
  for (int i = 0; i < m_; ++i) {
    long s = a % p_;
    r += (s ? p_ - s : 0) * pw_[static_cast<size_t>(i)];
    a /= p_;
  }
  return r;
}

long ExtField::sub(long a, long b) const { return add(a, neg(b)); }

long ExtField::mul_slow(long a, long b) const {
  FpPoly fa(p_, digits(a)), fb(p_, digits(b));
  FpPoly r = (fa * fb) % modulus_;
  return from_digits(r.c);
}

long ExtField::mul(long a, long b) const {
  if (a == 0 || b == 0) return 0;
  if (log_.empty()) return mul_slow(a, b);
  long e = log_[static_cast<size_t>(a)] + log_[static_cast<size_t>(b)];
  if (e >= q_ - 1) e -= q_ - 1;
  return exp_[static_cast<size_t>(e)];
}

long ExtField::pow(long a, unsigned long e) const {
  long r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

long ExtField::inv(long a) const {
  if (a == 0) throw std::domain_error("ExtField: inverse of zero");
  if (!log_.empty()) {
    long l = log_[static_cast<size_t>(a)];
    return exp_[static_cast<size_t>(l == 0 ? 0 : q_ - 1 - l)];
  }
  return pow(a, static_cast<unsigned long>(q_ - 2));
}

// ---------------------------------------------------------------------------

ExtFieldElem::ExtFieldElem(std::shared_ptr<const ExtField> field, long index) : field_(std::move(field)), index_(index) {
  if (!field_) throw std::invalid_argument("ExtFieldElem: null field");
  if (index_ < 0 || index_ >= field_->order()) throw std::out_of_range("ExtFieldElem: index out of range");
}

ExtFieldElem ExtFieldElem::from_coeffs(std::shared_ptr<const ExtField> field, const std::vector<PrimeFieldElem>& coeffs) {
  if (static_cast<int>(coeffs.size()) != field->degree())
    throw std::invalid_argument("ExtFieldElem: coefficient count differs from field degree");
  std::vector<long> d;
  for (const auto& c : coeffs) {
    if (c.modulus() != field->p()) throw std::invalid_argument("ExtFieldElem: coefficient modulus mismatch");
    d.push_back(c.value());
  }
  const long idx = field->from_digits(d);
  return ExtFieldElem(std::move(field), idx);
}

std::vector<PrimeFieldElem> ExtFieldElem::coeffs() const {
  std::vector<PrimeFieldElem> out;
  for (long d : field_->digits(index_)) out.push_back(PrimeFieldElem::unchecked(d, field_->p()));
  return out;
}

void ExtFieldElem::check(const ExtFieldElem& o) const {
  if (field_ != o.field_ && !(field_->modulus() == o.field_->modulus()))
    throw std::invalid_argument("ExtFieldElem: elements of different fields");
}

ExtFieldElem ExtFieldElem::operator+(const ExtFieldElem& o) const {
  check(o);
  return ExtFieldElem(field_, field_->add(index_, o.index_));
}
ExtFieldElem ExtFieldElem::operator-(const ExtFieldElem& o) const {
  check(o);
  return ExtFieldElem(field_, field_->sub(index_, o.index_));
}
ExtFieldElem ExtFieldElem::operator*(const ExtFieldElem& o) const {
  check(o);
  return ExtFieldElem(field_, field_->mul(index_, o.index_));
}
ExtFieldElem ExtFieldElem::operator-() const { return ExtFieldElem(field_, field_->neg(index_)); }
ExtFieldElem ExtFieldElem::inverse() const { return ExtFieldElem(field_, field_->inv(index_)); }

bool ExtFieldElem::operator==(const ExtFieldElem& o) const {
  return index_ == o.index_ && (field_ == o.field_ || field_->modulus() == o.field_->modulus());
}

}  // namespace cryslat
