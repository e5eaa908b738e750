#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cryslat/arith/integer.hpp"

namespace cryslat {

using Exponent = std::vector<int>;

inline long total_degree(const Exponent& e) {
  long s = 0;
  for (int x : e) s += x;
  return s;
}

/// Multivariate polynomial stored as exponent vector -> nonzero coefficient.
///
/// R is an exact coefficient ring with value semantics and a comparison
/// against R(0): Int, Rat and plain integers are used in this library.
template <class R>
class SparsePoly {
 public:
  using Terms = std::map<Exponent, R>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> vars, std::optional<std::vector<int>> weights = std::nullopt)
      : vars_(std::move(vars)), weights_(std::move(weights)) {
    if (weights_) {
      if (weights_->size() != vars_.size()) throw std::invalid_argument("SparsePoly: weight count differs from variable count");
      for (int w : *weights_)
        if (w < 1) throw std::invalid_argument("SparsePoly: weights must be positive");
    }
  }

  static SparsePoly monomial(std::vector<std::string> vars, const Exponent& e, R c = R(1)) {
    SparsePoly r(std::move(vars));
    r.add_term(e, c);
    return r;
  }

  size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::optional<std::vector<int>>& weights() const { return weights_; }
  void set_weights(std::optional<std::vector<int>> w) { *this = SparsePoly(vars_, std::move(w)).plus_terms(terms_); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  R coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? R(0) : it->second;
  }

  /// Adds c·x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const R& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("SparsePoly: exponent arity mismatch");
    for (int x : e)
      if (x < 0) throw std::invalid_argument("SparsePoly: negative exponent");
    if (c == R(0)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == R(0)) terms_.erase(it);
    }
  }

  long weight(size_t i) const { return weights_ ? (*weights_)[i] : 1; }

  long weighted_degree(const Exponent& e) const {
    long s = 0;
    for (size_t i = 0; i < e.size(); ++i) s += weight(i) * e[i];
    return s;
  }

  /// Maximal (weighted) degree; -1 for the zero polynomial.
  long degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, weighted_degree(e));
    return d;
  }

  bool is_homogeneous(long d) const {
    for (const auto& [e, c] : terms_)
      if (weighted_degree(e) != d) return false;
    return true;
  }

  SparsePoly operator+(const SparsePoly& o) const {
    check(o);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }

  SparsePoly operator-(const SparsePoly& o) const {
    check(o);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
  }

  SparsePoly operator-() const {
    SparsePoly r(vars_, weights_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  SparsePoly operator*(const SparsePoly& o) const {
    check(o);
    SparsePoly r(vars_, weights_);
    Exponent s(vars_.size());
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        for (size_t i = 0; i < s.size(); ++i) s[i] = ea[i] + eb[i];
        r.add_term(s, ca * cb);
      }
    return r;
  }

  SparsePoly scaled(const R& k) const {
    SparsePoly r(vars_, weights_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * k);
    return r;
  }

  /// Multiplication by the monomial c·x^e.
  SparsePoly times_monomial(const Exponent& m, const R& k = R(1)) const {
    SparsePoly r(vars_, weights_);
    Exponent s(vars_.size());
    for (const auto& [e, c] : terms_) {
      for (size_t i = 0; i < s.size(); ++i) s[i] = e[i] + m[i];
      r.add_term(s, c * k);
    }
    return r;
  }

  SparsePoly derivative(size_t var) const {
    if (var >= vars_.size()) throw std::out_of_range("SparsePoly: derivative variable out of range");
    SparsePoly r(vars_, weights_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent f = e;
      --f[var];
      r.add_term(f, c * R(e[var]));
    }
    return r;
  }

  /// Substitutes x_var = value and removes that variable.
  SparsePoly eliminate_variable(size_t var, const R& value) const {
    if (var >= vars_.size()) throw std::out_of_range("SparsePoly: variable out of range");
    std::vector<std::string> nv = vars_;
    nv.erase(nv.begin() + static_cast<long>(var));
    std::optional<std::vector<int>> nw;
    if (weights_) {
      nw = *weights_;
      nw->erase(nw->begin() + static_cast<long>(var));
    }
    SparsePoly r(nv, nw);
    for (const auto& [e, c] : terms_) {
      R k = c;
      for (int i = 0; i < e[var]; ++i) k *= value;
      Exponent f = e;
      f.erase(f.begin() + static_cast<long>(var));
      r.add_term(f, k);
    }
    return r;
  }

  /// Inserts a new variable at position `var` so every term has (weighted)
  /// degree d. Throws if some term already exceeds d or the weight does not
  /// divide the deficit.
  SparsePoly homogenize(size_t var, const std::string& name, long d, int w = 1) const {
    std::vector<std::string> nv = vars_;
    nv.insert(nv.begin() + static_cast<long>(var), name);
    std::optional<std::vector<int>> nw;
    if (weights_) {
      nw = *weights_;
      nw->insert(nw->begin() + static_cast<long>(var), w);
    } else if (w != 1) {
      nw = std::vector<int>(nv.size(), 1);
      (*nw)[var] = w;
    }
    SparsePoly r(nv, nw);
    for (const auto& [e, c] : terms_) {
      const long gap = d - weighted_degree(e);
      if (gap < 0 || gap % w != 0) throw std::invalid_argument("SparsePoly: cannot homogenize to the requested degree");
      Exponent f = e;
      f.insert(f.begin() + static_cast<long>(var), static_cast<int>(gap / w));
      r.add_term(f, c);
    }
    return r;
  }

  /// Renames/reorders variables: new variable i is old variable perm[i].
  SparsePoly permuted(const std::vector<size_t>& perm) const {
    if (perm.size() != vars_.size()) throw std::invalid_argument("SparsePoly: permutation arity mismatch");
    std::vector<std::string> nv;
    std::optional<std::vector<int>> nw;
    if (weights_) nw.emplace();
    for (size_t i : perm) {
      nv.push_back(vars_.at(i));
      if (nw) nw->push_back((*weights_)[i]);
    }
    SparsePoly r(nv, nw);
    for (const auto& [e, c] : terms_) {
      Exponent f(perm.size());
      for (size_t i = 0; i < perm.size(); ++i) f[i] = e[perm[i]];
      r.add_term(f, c);
    }
    return r;
  }

  /// Applies f to every coefficient (zero images are dropped).
  template <class F>
  auto map_coefficients(F f) const {
    using S = decltype(f(std::declval<const R&>()));
    SparsePoly<S> r(vars_, weights_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  bool operator==(const SparsePoly& o) const { return vars_ == o.vars_ && weights_ == o.weights_ && terms_ == o.terms_; }

 private:
  SparsePoly plus_terms(const Terms& t) const {
    SparsePoly r = *this;
    for (const auto& [e, c] : t) r.add_term(e, c);
    return r;
  }
  void check(const SparsePoly& o) const {
    if (vars_.size() != o.vars_.size()) throw std::invalid_argument("SparsePoly: arity mismatch");
  }

  std::vector<std::string> vars_;
  std::optional<std::vector<int>> weights_;
  Terms terms_;
};

using IntPoly = SparsePoly<Int>;

/// All exponent vectors in `nvars` variables of total degree <= max_degree.
std::vector<Exponent> monomials_up_to(size_t nvars, long max_degree);
/// All exponent vectors of total degree exactly `degree`.
std::vector<Exponent> monomials_of_degree(size_t nvars, long degree);

}  // namespace cryslat
