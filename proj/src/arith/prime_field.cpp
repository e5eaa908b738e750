#include "cryslat/arith/prime_field.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace cryslat {

PrimeFieldElem::PrimeFieldElem(long long value, long p) : value_(0), p_(p) {
  require_prime(p);
  value_ = mod_floor(value, p);
}

PrimeFieldElem PrimeFieldElem::unchecked(long value, long p) {
  PrimeFieldElem r;
  r.p_ = p;
  r.value_ = mod_floor(value, p);
  return r;
}

void PrimeFieldElem::check(const PrimeFieldElem& o) const {
  if (p_ != o.p_) throw std::invalid_argument("PrimeFieldElem: mismatched moduli");
}

PrimeFieldElem PrimeFieldElem::operator+(const PrimeFieldElem& o) const {
  check(o);
  return unchecked(value_ + o.value_, p_);
}

PrimeFieldElem PrimeFieldElem::operator-(const PrimeFieldElem& o) const {
  check(o);
  return unchecked(value_ - o.value_, p_);
}

PrimeFieldElem PrimeFieldElem::operator*(const PrimeFieldElem& o) const {
  check(o);
  return unchecked(static_cast<long>((static_cast<__int128>(value_) * o.value_) % p_), p_);
}

PrimeFieldElem PrimeFieldElem::operator-() const { return unchecked(-value_, p_); }

PrimeFieldElem PrimeFieldElem::inverse() const {
  if (value_ == 0) throw std::domain_error("PrimeFieldElem: inverse of zero");
  return unchecked(inverse_mod(value_, p_), p_);
}

PrimeFieldElem PrimeFieldElem::pow(unsigned long e) const {
  PrimeFieldElem r = unchecked(1, p_), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const PrimeFieldElem& x) {
  return os << x.value() << " (mod " << x.modulus() << ")";
}

// ---------------------------------------------------------------------------

namespace {

long mulmod(long a, long b, long p) {
  return static_cast<long>((static_cast<__int128>(a) * b) % p);
}

void check_same(const FpPoly& a, const FpPoly& b) {
  if (a.p != b.p) throw std::invalid_argument("FpPoly: mismatched moduli");
}

}  // namespace

FpPoly::FpPoly(long p_, std::vector<long> coeffs) : p(p_), c(std::move(coeffs)) {
  for (auto& x : c) x = mod_floor(x, p);
  trim();
}

FpPoly FpPoly::x_pow(long p, int e) {
  std::vector<long> c(static_cast<size_t>(e) + 1, 0);
  c.back() = 1;
  return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  FpPoly r;
  r.p = a.p;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    long s = (i < a.c.size() ? a.c[i] : 0) + (i < b.c.size() ? b.c[i] : 0);
    r.c[i] = s >= a.p ? s - a.p : s;
  }
  r.trim();
  return r;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  FpPoly r;
  r.p = a.p;
  r.c.assign(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) {
    long s = (i < a.c.size() ? a.c[i] : 0) - (i < b.c.size() ? b.c[i] : 0);
    r.c[i] = s < 0 ? s + a.p : s;
  }
  r.trim();
  return r;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  check_same(a, b);
  FpPoly r;
  r.p = a.p;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + mulmod(a.c[i], b.c[j], a.p)) % a.p;
  }
  r.trim();
  return r;
}

void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
  check_same(a, b);
  if (b.is_zero()) throw std::domain_error("FpPoly: division by zero polynomial");
  const long p = a.p;
  r = a;
  q = FpPoly();
  q.p = p;
  if (a.degree() < b.degree()) return;
  q.c.assign(static_cast<size_t>(a.degree() - b.degree() + 1), 0);
  const long inv = inverse_mod(b.lead(), p);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const long f = mulmod(r.lead(), inv, p);
    q.c[static_cast<size_t>(shift)] = f;
    for (size_t j = 0; j < b.c.size(); ++j) {
      long& t = r.c[j + static_cast<size_t>(shift)];
      t = mod_floor(t - mulmod(f, b.c[j], p), p);
    }
    r.trim();
  }
  q.trim();
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) {
  FpPoly q, r;
  divmod(a, b, q, r);
  return r;
}

FpPoly monic(const FpPoly& a) {
  if (a.is_zero()) return a;
  const long inv = inverse_mod(a.lead(), a.p);
  FpPoly r = a;
  for (auto& x : r.c) x = mulmod(x, inv, a.p);
  return r;
}

FpPoly gcd(FpPoly a, FpPoly b) {
  check_same(a, b);
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

FpPoly derivative(const FpPoly& a) {
  FpPoly r;
  r.p = a.p;
  for (size_t i = 1; i < a.c.size(); ++i) r.c.push_back(mulmod(a.c[i], static_cast<long>(i % a.p), a.p));
  r.trim();
  return r;
}

FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& m) {
  if (e < 0) throw std::invalid_argument("powmod: negative exponent");
  FpPoly r(base.p, {1});
  r = r % m;
  FpPoly b = base % m;
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * b) % m;
  }
  return r;
}

FpPoly compose_mod(const FpPoly& f, const FpPoly& g, const FpPoly& m) {
  FpPoly r;
  r.p = f.p;
  for (size_t i = f.c.size(); i-- > 0;) r = (r * g + FpPoly(f.p, {f.c[i]})) % m;
  return r;
}

bool is_irreducible(const FpPoly& f) {
  const int m = f.degree();
  if (m < 1) return false;
  if (m == 1) return true;
  const FpPoly x = FpPoly::x_pow(f.p, 1);
  FpPoly h = x % f;
  for (int i = 1; i <= m / 2; ++i) {
    h = powmod(h, Int(f.p), f);
    if (gcd(f, h - x).degree() > 0) return false;
  }
  return true;
}

FpPoly find_irreducible(long p, int m) {
  require_prime(p);
  if (m < 1) throw std::invalid_argument("find_irreducible: degree must be positive");
  const Int count = ipow(p, static_cast<unsigned long>(m));
  for (Int idx = 0; idx < count; ++idx) {
    std::vector<long> c(static_cast<size_t>(m) + 1, 0);
    Int t = idx;
    for (int i = 0; i < m; ++i) {
      c[static_cast<size_t>(i)] = Int(t % p).get_si();
      t /= p;
    }
    c.back() = 1;
    FpPoly f(p, std::move(c));
    if (is_irreducible(f)) return f;
  }
  throw std::logic_error("find_irreducible: exhausted candidates");
}

bool is_squarefree(const FpPoly& f) {
  if (f.degree() <= 0) return true;
  FpPoly df = derivative(f);
  if (df.is_zero()) return false;
  return gcd(f, df).degree() == 0;
}

std::vector<int> factor_degrees(const FpPoly& f_in) {
  if (!is_squarefree(f_in)) throw std::domain_error("factor_degrees: polynomial has repeated factors");
  std::vector<int> out;
  FpPoly f = monic(f_in);
  const FpPoly x = FpPoly::x_pow(f.p, 1);
  FpPoly h = f.degree() > 0 ? x % f : x;
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = powmod(h, Int(f.p), f);
    FpPoly g = gcd(f, h - x);
    if (g.degree() > 0) {
      for (int j = 0; j < g.degree() / i; ++j) out.push_back(i);
      FpPoly q, r;
      divmod(f, g, q, r);
      f = q;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back(f.degree());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cryslat
