#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "cryslat/arith/ring.hpp"

namespace cryslat {

/// Sparse matrix over a single coefficient ring. Rows are maps column ->
/// nonzero entry; `zero` is a prototype that fixes the ring (and its modulus).
template <class R>
class ExactMatrix {
 public:
  ExactMatrix(size_t rows, size_t cols, R zero) : rows_(rows), cols_(cols), zero_(zero_like(zero)), data_(rows) {}

  static ExactMatrix identity(size_t n, const R& zero) {
    ExactMatrix m(n, n, zero);
    for (size_t i = 0; i < n; ++i) m.set(i, i, one_like(zero));
    return m;
  }

  static ExactMatrix from_dense(const std::vector<std::vector<R>>& rows, const R& zero) {
    const size_t c = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(rows.size(), c, zero);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ExactMatrix: ragged rows");
      for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const R& zero() const { return zero_; }

  R at(size_t i, size_t j) const {
    bounds(i, j);
    auto it = data_[i].find(j);
    return it == data_[i].end() ? zero_ : it->second;
  }

  void set(size_t i, size_t j, const R& v) {
    bounds(i, j);
    if (elem_is_zero(v))
      data_[i].erase(j);
    else
      data_[i].insert_or_assign(j, v);
  }

  const std::map<size_t, R>& row(size_t i) const { return data_.at(i); }
  size_t nonzeros() const {
    size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
  }

  std::vector<std::vector<R>> to_dense() const {
    std::vector<std::vector<R>> d(rows_, std::vector<R>(cols_, zero_));
    for (size_t i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) d[i][j] = v;
    return d;
  }

  ExactMatrix operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: dimension mismatch in product");
    ExactMatrix r(rows_, o.cols_, zero_);
    for (size_t i = 0; i < rows_; ++i) {
      std::map<size_t, R> acc;
      for (const auto& [k, a] : data_[i])
        for (const auto& [j, b] : o.data_[k]) {
          auto it = acc.find(j);
          if (it == acc.end())
            acc.emplace(j, a * b);
          else
            it->second = it->second + a * b;
        }
      for (auto& [j, v] : acc) r.set(i, j, v);
    }
    return r;
  }

  ExactMatrix operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: dimension mismatch in sum");
    ExactMatrix r = *this;
    for (size_t i = 0; i < rows_; ++i)
      for (const auto& [j, v] : o.data_[i]) r.set(i, j, r.at(i, j) + v);
    return r;
  }

  /// Applies f to every stored entry.
  ExactMatrix map(const std::function<R(const R&)>& f) const {
    ExactMatrix r(rows_, cols_, zero_);
    for (size_t i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) r.set(i, j, f(v));
    return r;
  }

  R trace() const {
    if (rows_ != cols_) throw std::invalid_argument("ExactMatrix: trace of a non-square matrix");
    R t = zero_;
    for (size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
  }

  bool operator==(const ExactMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

 private:
  void bounds(size_t i, size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("ExactMatrix: index out of range");
  }
  size_t rows_, cols_;
  R zero_;
  std::vector<std::map<size_t, R>> data_;
};

/// Coefficients c_0..c_n of det(1 - M·T) (c_0 = 1), by Berkowitz's
/// division-free algorithm; valid over any commutative ring.
template <class R>
std::vector<R> char_poly(const ExactMatrix<R>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("char_poly: matrix is not square");
  const size_t n = M.rows();
  const R zero = M.zero();
  const R one = one_like(zero);
  const auto A = M.to_dense();
  std::vector<R> vect{one};
  for (size_t r = 0; r < n; ++r) {
    // Leading (r+1)x(r+1) block [[A_r, C], [Rw, a]].
    std::vector<R> t(r + 2, zero);
    t[0] = one;
    t[1] = zero - A[r][r];
    std::vector<R> cur(r, zero);  // A_r^k C
    for (size_t i = 0; i < r; ++i) cur[i] = A[i][r];
    for (size_t k = 0; k < r; ++k) {
      R s = zero;
      for (size_t i = 0; i < r; ++i) s = s + A[r][i] * cur[i];
      t[k + 2] = zero - s;
      if (k + 1 < r) {
        std::vector<R> nxt(r, zero);
        for (size_t i = 0; i < r; ++i) {
          R acc = zero;
          for (size_t j = 0; j < r; ++j) acc = acc + A[i][j] * cur[j];
          nxt[i] = acc;
        }
        cur.swap(nxt);
      }
    }
    std::vector<R> nv(r + 2, zero);
    for (size_t i = 0; i < r + 2; ++i)
      for (size_t j = 0; j <= std::min(i, r); ++j) nv[i] = nv[i] + t[i - j] * vect[j];
    vect.swap(nv);
  }
  return vect;
}

/// A · A^σ · A^{σ²} ··· A^{σ^{a-1}} for an entrywise ring automorphism σ.
template <class R>
ExactMatrix<R> sigma_twisted_power(const ExactMatrix<R>& A, const std::function<R(const R&)>& sigma, unsigned a) {
  if (A.rows() != A.cols()) throw std::invalid_argument("sigma_twisted_power: matrix is not square");
  if (a == 0) throw std::invalid_argument("sigma_twisted_power: a must be positive");
  ExactMatrix<R> result = A;
  ExactMatrix<R> twisted = A;
  for (unsigned i = 1; i < a; ++i) {
    twisted = twisted.map(sigma);
    result = result * twisted;
  }
  return result;
}

}  // namespace cryslat
