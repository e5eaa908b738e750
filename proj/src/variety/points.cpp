#include "cryslat/variety/points.hpp"

#include <atomic>
#include <thread>

namespace cryslat {

CompiledPoly::CompiledPoly(const IntPoly& f, const ExtField& F) : F_(&F) {
  for (const auto& [e, c] : f.terms()) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(F.p()));
    if (r == 0) continue;
    exps_.push_back(e);
    coeffs_.push_back(F.from_int(r.get_si()));
    for (int x : e) max_exp_ = std::max(max_exp_, x);
  }
}

long CompiledPoly::eval(const std::vector<std::vector<long>>& pows) const {
  long acc = 0;
  for (size_t t = 0; t < exps_.size(); ++t) {
    long term = coeffs_[t];
    const Exponent& e = exps_[t];
    for (size_t i = 0; i < e.size() && term != 0; ++i)
      if (e[i]) term = F_->mul(term, pows[i][static_cast<size_t>(e[i])]);
    acc = F_->add(acc, term);
  }
  return acc;
}

void power_table(const ExtField& F, const std::vector<long>& x, int max_e, std::vector<std::vector<long>>& pows) {
  pows.resize(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    auto& row = pows[i];
    row.resize(static_cast<size_t>(max_e) + 1);
    row[0] = 1;
    for (int e = 1; e <= max_e; ++e) row[static_cast<size_t>(e)] = F.mul(row[static_cast<size_t>(e) - 1], x[i]);
  }
}

Int projective_point_count(size_t nvars, long q) {
  if (nvars == 0) return 0;
  return (ipow(q, static_cast<unsigned long>(nvars)) - 1) / (q - 1);
}

namespace {

template <class F>
void run_chunks(size_t chunks, unsigned threads, F&& work) {
  if (threads <= 1 || chunks <= 1) {
    for (size_t c = 0; c < chunks; ++c) work(c);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < std::min<size_t>(threads, chunks); ++w)
    pool.emplace_back([&] {
      for (size_t c; (c = next.fetch_add(1)) < chunks;) work(c);
    });
  for (auto& t : pool) t.join();
}

// Odometer over `len` coordinates starting at position `from`; returns false
// when it wraps around.
bool advance(std::vector<long>& pt, size_t from, long q) {
  for (size_t i = pt.size(); i-- > from;) {
    if (++pt[i] < q) return true;
    pt[i] = 0;
  }
  return false;
}

}  // namespace

// Chunk layout: for lead position j = nvars-1 down to 0, either a single
// chunk (j = nvars-1) or q chunks indexed by the coordinate after the lead.
size_t projective_chunks(size_t nvars, long q) {
  if (nvars == 0) return 0;
  return 1 + (nvars - 1) * static_cast<size_t>(q);
}

void for_each_projective_point(size_t nvars, const ExtField& F, unsigned threads,
                               const std::function<bool(size_t, const std::vector<long>&)>& visit) {
  const long q = F.order();
  const size_t chunks = projective_chunks(nvars, q);
  run_chunks(chunks, threads, [&](size_t c) {
    std::vector<long> pt(nvars, 0);
    if (c == 0) {
      pt[nvars - 1] = 1;
      visit(c, pt);
      return;
    }
    const size_t lead = nvars - 2 - (c - 1) / static_cast<size_t>(q);
    pt[lead] = 1;
    pt[lead + 1] = static_cast<long>((c - 1) % static_cast<size_t>(q));
    do {
      if (visit(c, pt)) return;
    } while (advance(pt, lead + 2, q));
  });
}

void for_each_cone_point(size_t nvars, const ExtField& F, unsigned threads,
                         const std::function<void(size_t, const std::vector<long>&)>& visit) {
  const long q = F.order();
  run_chunks(static_cast<size_t>(q), threads, [&](size_t c) {
    std::vector<long> pt(nvars, 0);
    pt[0] = static_cast<long>(c);
    do {
      bool zero = true;
      for (long x : pt)
        if (x) zero = false;
      if (!zero) visit(c, pt);
    } while (advance(pt, 1, q));
  });
}

}  // namespace cryslat
