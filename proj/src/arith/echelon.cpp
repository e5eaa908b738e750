#include "cryslat/arith/echelon.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace cryslat {

Int SparseRow::at(uint32_t c) const {
  auto it = std::lower_bound(col.begin(), col.end(), c);
  if (it == col.end() || *it != c) return 0;
  return val[static_cast<size_t>(it - col.begin())];
}

SparseRow SparseRow::from_pairs(std::vector<std::pair<uint32_t, Int>> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow r;
  for (auto& [c, v] : pairs) {
    if (!r.col.empty() && r.col.back() == c) {
      r.val.back() += v;
      if (r.val.back() == 0) {
        r.col.pop_back();
        r.val.pop_back();
      }
    } else if (v != 0) {
      r.col.push_back(c);
      r.val.push_back(std::move(v));
    }
  }
  return r;
}

bool make_primitive(SparseRow& r) {
  if (r.empty()) return false;
  Int g = 0;
  for (const auto& v : r.val) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return true;
  }
  for (auto& v : r.val) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return true;
}

SparseRow combine(const Int& a, const SparseRow& x, const Int& b, const SparseRow& y) {
  SparseRow r;
  r.col.reserve(x.size() + y.size());
  r.val.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  Int t;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x.col[i] < y.col[j])) {
      t = a * x.val[i];
      r.col.push_back(x.col[i++]);
    } else if (i == x.size() || y.col[j] < x.col[i]) {
      t = -(b * y.val[j]);
      r.col.push_back(y.col[j++]);
    } else {
      t = a * x.val[i];
      mpz_submul(t.get_mpz_t(), b.get_mpz_t(), y.val[j].get_mpz_t());
      if (t == 0) {
        ++i;
        ++j;
        continue;
      }
      r.col.push_back(x.col[i]);
      ++i;
      ++j;
    }
    if (t == 0) {
      r.col.pop_back();
      continue;
    }
    r.val.push_back(t);
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

struct DenseLocal {
  long p;
  std::vector<std::vector<Rat>> a;
};

long val_of(const Rat& x, long p) { return rational_valuation(x, p); }

Rat unit_part(const Rat& x, long p, long v) {
  Rat u = x;
  if (v > 0) u /= Rat(ipow(p, static_cast<unsigned long>(v)));
  return u;
}

template <class F>
void parallel_for(size_t n, unsigned threads, F&& f) {
  if (threads <= 1 || n < 32) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  const unsigned t = std::min<unsigned>(threads, static_cast<unsigned>(n));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < t; ++w)
    pool.emplace_back([&, w] {
      for (size_t i = w; i < n; i += t) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

UnitPivotEchelon echelonize_unit_pivot(const ExactMatrix<LocalRational>& M) {
  const long p = M.zero().prime();
  const size_t nr = M.rows(), nc = M.cols();
  std::vector<std::vector<Rat>> a(nr, std::vector<Rat>(nc));
  for (size_t i = 0; i < nr; ++i)
    for (const auto& [j, v] : M.row(i)) a[i][j] = v.value();
  std::vector<std::vector<Rat>> t(nr, std::vector<Rat>(nr));
  for (size_t i = 0; i < nr; ++i) t[i][i] = 1;

  std::vector<bool> row_done(nr, false), col_done(nc, false);
  std::vector<size_t> order;
  UnitPivotEchelon out{ExactMatrix<LocalRational>(nr, nc, M.zero()), {}, {}, ExactMatrix<LocalRational>(nr, nr, M.zero()), 0};
  while (true) {
    long best_v = -1;
    size_t bi = 0, bj = 0;
    for (size_t j = 0; j < nc; ++j) {
      if (col_done[j]) continue;
      for (size_t i = 0; i < nr; ++i) {
        if (row_done[i] || a[i][j] == 0) continue;
        const long v = val_of(a[i][j], p);
        if (best_v < 0 || v < best_v) {
          best_v = v;
          bi = i;
          bj = j;
        }
      }
      if (best_v == 0) break;
    }
    if (best_v < 0) break;
    const Rat u = unit_part(a[bi][bj], p, best_v);
    for (auto& x : a[bi]) x /= u;
    for (auto& x : t[bi]) x /= u;
    const Rat pv = a[bi][bj];
    for (size_t i = 0; i < nr; ++i) {
      if (row_done[i] || i == bi || a[i][bj] == 0) continue;
      const Rat f = a[i][bj] / pv;
      for (size_t j = 0; j < nc; ++j)
        if (a[bi][j] != 0) a[i][j] -= f * a[bi][j];
      for (size_t j = 0; j < nr; ++j)
        if (t[bi][j] != 0) t[i][j] -= f * t[bi][j];
    }
    row_done[bi] = true;
    col_done[bj] = true;
    order.push_back(bi);
    out.pivot_columns.push_back(bj);
    out.pivot_valuations.push_back(best_v);
    out.ledger += best_v;
  }
  for (size_t i = 0; i < nr; ++i)
    if (!row_done[i]) order.push_back(i);
  for (size_t r = 0; r < nr; ++r) {
    const size_t i = order[r];
    for (size_t j = 0; j < nc; ++j)
      if (a[i][j] != 0) out.form.set(r, j, LocalRational(a[i][j], p));
    for (size_t j = 0; j < nr; ++j)
      if (t[i][j] != 0) out.transform.set(r, j, LocalRational(t[i][j], p));
  }
  return out;
}

// ---------------------------------------------------------------------------

SaturatedEchelon::SaturatedEchelon(size_t ncols, long p) : ncols_(ncols), p_(p), pivot_of_col_(ncols, -1) {
  require_prime(p);
}

void SaturatedEchelon::build(std::vector<SparseRow> rows, unsigned threads) {
  const unsigned long up = static_cast<unsigned long>(p_);
  auto first_unit = [up](const SparseRow& r) -> uint32_t {
    for (size_t i = 0; i < r.size(); ++i)
      if (!mpz_divisible_ui_p(r.val[i].get_mpz_t(), up)) return r.col[i];
    throw std::logic_error("SaturatedEchelon: primitive row without a unit entry");
  };
  using Key = std::tuple<uint32_t, size_t, size_t>;
  std::set<Key> queue;
  std::vector<Key> key(rows.size());
  std::vector<bool> active(rows.size(), false);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (uint32_t c : rows[i].col)
      if (c >= ncols_) throw std::out_of_range("SaturatedEchelon: column index out of range");
    if (!make_primitive(rows[i])) continue;
    key[i] = {first_unit(rows[i]), rows[i].size(), i};
    queue.insert(key[i]);
    active[i] = true;
  }
  std::vector<size_t> hits;
  while (!queue.empty()) {
    const auto [c, nnz, id] = *queue.begin();
    queue.erase(queue.begin());
    active[id] = false;
    SparseRow piv = std::move(rows[id]);
    const Int e = piv.at(c);

    hits.clear();
    for (const Key& k : queue) {
      const size_t o = std::get<2>(k);
      if (std::binary_search(rows[o].col.begin(), rows[o].col.end(), c)) hits.push_back(o);
    }
    for (size_t o : hits) queue.erase(key[o]);
    parallel_for(hits.size(), threads, [&](size_t h) {
      SparseRow& r = rows[hits[h]];
      const Int eo = r.at(c);
      Int g;
      mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), eo.get_mpz_t());
      r = combine(Int(e / g), r, Int(eo / g), piv);
      make_primitive(r);
    });
    for (size_t o : hits) {
      if (rows[o].empty()) {
        active[o] = false;
        continue;
      }
      key[o] = {first_unit(rows[o]), rows[o].size(), o};
      queue.insert(key[o]);
    }
    pivot_of_col_[c] = static_cast<long>(pivot_cols_.size());
    pivot_cols_.push_back(c);
    pivot_rows_.push_back(std::move(piv));
  }
}

std::vector<uint32_t> SaturatedEchelon::free_columns() const {
  std::vector<uint32_t> f;
  for (uint32_t c = 0; c < ncols_; ++c)
    if (pivot_of_col_[c] < 0) f.push_back(c);
  return f;
}

SaturatedEchelon::Reduction SaturatedEchelon::reduce(const SparseRow& v, const Int& den_in) const {
  if (den_in == 0) throw std::invalid_argument("SaturatedEchelon::reduce: zero denominator");
  std::vector<Int> w(ncols_);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v.col[i] >= ncols_) throw std::out_of_range("SaturatedEchelon::reduce: column index out of range");
    w[v.col[i]] = v.val[i];
  }
  Int den = den_in;
  Int g, a, b;
  size_t since_norm = 0;
  for (size_t k = 0; k < pivot_cols_.size(); ++k) {
    const uint32_t c = pivot_cols_[k];
    if (w[c] == 0) continue;
    const SparseRow& r = pivot_rows_[k];
    const Int e = r.at(c);
    mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), w[c].get_mpz_t());
    a = e / g;
    b = w[c] / g;
    if (a != 1) {
      for (auto& x : w)
        if (x != 0) x *= a;
      den *= a;
    }
    for (size_t i = 0; i < r.size(); ++i) mpz_submul(w[r.col[i]].get_mpz_t(), b.get_mpz_t(), r.val[i].get_mpz_t());
    if (++since_norm >= 16) {
      since_norm = 0;
      g = den;
      for (const auto& x : w) {
        if (g == 1) break;
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      }
      if (g != 1) {
        for (auto& x : w)
          if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
      }
    }
  }
  Reduction out{{}, 0};
  long min_v = 0;
  for (uint32_t c = 0; c < ncols_; ++c) {
    if (pivot_of_col_[c] >= 0) continue;
    Rat x(w[c], den);
    x.canonicalize();
    if (x != 0) min_v = std::min(min_v, rational_valuation(x, p_));
    out.coords.push_back(std::move(x));
  }
  out.torsion_exponent = -min_v;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

SparseRow integral_row(const std::vector<Rat>& v, long p) {
  Int l = 1;
  for (const auto& x : v) {
    if (x != 0 && mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
      throw std::domain_error("lattice_quotient_basis: entry outside Z_(p)");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  }
  std::vector<std::pair<uint32_t, Int>> pairs;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) pairs.emplace_back(static_cast<uint32_t>(i), Int(v[i] * l));
  return SparseRow::from_pairs(std::move(pairs));
}

}  // namespace

std::vector<std::vector<Rat>> lattice_quotient_basis(const std::vector<std::vector<Rat>>& ambient_gens,
                                                     const std::vector<std::vector<Rat>>& sub_gens, long p) {
  require_prime(p);
  size_t n = 0;
  bool have = false;
  for (const auto* set : {&ambient_gens, &sub_gens})
    for (const auto& v : *set) {
      if (have && v.size() != n) throw std::invalid_argument("lattice_quotient_basis: arity mismatch");
      n = v.size();
      have = true;
    }
  if (!have) return {};
  SaturatedEchelon sat(n, p);
  std::vector<SparseRow> rows;
  for (const auto& v : sub_gens) rows.push_back(integral_row(v, p));
  sat.build(std::move(rows));
  const auto free = sat.free_columns();
  if (ambient_gens.empty() || free.empty()) return {};

  ExactMatrix<LocalRational> Q(ambient_gens.size(), free.size(), LocalRational(0, p));
  for (size_t i = 0; i < ambient_gens.size(); ++i) {
    // Unit denominators are cleared for the integer engine and restored here.
    Int l = 1;
    for (const auto& x : ambient_gens[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    const auto red = sat.reduce(integral_row(ambient_gens[i], p), l);
    for (size_t j = 0; j < free.size(); ++j)
      if (red.coords[j] != 0) Q.set(i, j, LocalRational(red.coords[j], p));
  }
  const auto ech = echelonize_unit_pivot(Q);
  std::vector<std::vector<Rat>> out;
  for (size_t r = 0; r < ech.pivot_columns.size(); ++r) {
    std::vector<Rat> v(n);
    for (const auto& [j, x] : ech.form.row(r)) v[free[j]] = x.value();
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cryslat
