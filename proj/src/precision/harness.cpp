#include "cryslat/precision/harness.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "cryslat/arith/matrix.hpp"

namespace cryslat {

HodgeBlockShape HodgeBlockShape::make(std::vector<long> x_blocks, std::vector<long> d_blocks) {
  if (x_blocks.size() < 2) throw std::invalid_argument("HodgeBlockShape: need n+1 >= 2 X-blocks");
  if (d_blocks.size() + 1 != x_blocks.size()) throw std::invalid_argument("HodgeBlockShape: need n X-blocks + 1 and n D-blocks");
  for (long w : x_blocks)
    if (w < 0) throw std::invalid_argument("HodgeBlockShape: negative block width");
  for (long w : d_blocks)
    if (w < 0) throw std::invalid_argument("HodgeBlockShape: negative block width");
  HodgeBlockShape s;
  s.n = static_cast<int>(d_blocks.size());
  s.x_blocks = std::move(x_blocks);
  s.d_blocks = std::move(d_blocks);
  if (s.size() == 0) throw std::invalid_argument("HodgeBlockShape: empty shape");
  return s;
}

long HodgeBlockShape::x_size() const { return std::accumulate(x_blocks.begin(), x_blocks.end(), 0L); }
long HodgeBlockShape::d_size() const { return std::accumulate(d_blocks.begin(), d_blocks.end(), 0L); }

namespace {

long column_valuation(const HodgeBlockShape& s, long j) {
  long acc = 0;
  for (size_t q = 0; q < s.x_blocks.size(); ++q) {
    acc += s.x_blocks[q];
    if (j < acc) return static_cast<long>(q);
  }
  for (size_t b = 0; b < s.d_blocks.size(); ++b) {
    acc += s.d_blocks[b];
    if (j < acc) return static_cast<long>(b) + 1;
  }
  throw std::out_of_range("HodgeBlockShape: column out of range");
}

}  // namespace

long HodgeBlockShape::floor_valuation(long i, long j, long N) const {
  const long X = x_size();
  if (i < 0 || j < 0 || i >= size() || j >= size()) throw std::out_of_range("HodgeBlockShape: entry out of range");
  const bool xrow = i < X, xcol = j < X;
  if (xrow && !xcol) return 0;
  if (!xrow && xcol) return N;
  return column_valuation(*this, j);
}

HodgePolygon HodgeBlockShape::polygon() const {
  std::vector<std::pair<long, Rat>> pts{{0, Rat(0)}};
  long x = 0;
  Rat y = 0;
  for (int s = 0; s <= n; ++s) {
    long mult = x_blocks[static_cast<size_t>(s)];
    if (s >= 1) mult += d_blocks[static_cast<size_t>(s - 1)];
    if (mult == 0) continue;
    x += mult;
    y += Rat(mult * s);
    pts.emplace_back(x, y);
  }
  return lower_hull(pts);
}

std::string HodgeBlockShape::str() const {
  std::string s = "(";
  for (size_t i = 0; i < x_blocks.size(); ++i) s += (i ? "," : "") + std::to_string(x_blocks[i]);
  s += " | ";
  for (size_t i = 0; i < d_blocks.size(); ++i) s += (i ? "," : "") + std::to_string(d_blocks[i]);
  return s + ")";
}

std::string to_string(PerturbationMode m) {
  switch (m) {
    case PerturbationMode::Uniform: return "uniform";
    case PerturbationMode::Relative: return "relative";
    case PerturbationMode::Zero: return "zero";
  }
  return "?";
}

PerturbationMode perturbation_mode_from_string(const std::string& s) {
  if (s == "uniform") return PerturbationMode::Uniform;
  if (s == "relative") return PerturbationMode::Relative;
  if (s == "zero") return PerturbationMode::Zero;
  throw std::invalid_argument("unknown perturbation mode '" + s + "' (expected uniform, relative or zero)");
}

namespace {

struct TrialResult {
  std::vector<std::optional<long>> slack;  // per coefficient
};

TrialResult run_trial(const HodgeBlockShape& shape, long N, long p, std::uint64_t seed, long trial, PerturbationMode mode,
                      const std::vector<long>& required) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(static_cast<std::uint64_t>(trial) >> 32)};
  std::mt19937_64 rng(seq);
  gmp_randclass big(gmp_randinit_mt);
  big.seed(static_cast<unsigned long>(rng()));
  const long m = shape.size();
  const Int mod = ipow(p, static_cast<unsigned long>(N + 3));
  ExactMatrix<Int> A(static_cast<size_t>(m), static_cast<size_t>(m), Int(0));
  ExactMatrix<Int> At(static_cast<size_t>(m), static_cast<size_t>(m), Int(0));
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < m; ++j) {
      const long v = shape.floor_valuation(i, j, N);
      const bool zero_block = i >= shape.x_size() && j < shape.x_size();
      Int a = 0;
      if (!zero_block) {
        Int u = big.get_z_range(mod);
        if (rng() & 1) {
          // attain the floor exactly
          if (u % p == 0) u += 1;
        }
        a = ipow(p, static_cast<unsigned long>(v)) * u;
      }
      Int e = big.get_z_range(mod) - mod / 2;
      Int at = a;
      switch (mode) {
        case PerturbationMode::Uniform: at += ipow(p, static_cast<unsigned long>(N)) * e; break;
        case PerturbationMode::Relative: at += ipow(p, static_cast<unsigned long>(N + v)) * e; break;
        case PerturbationMode::Zero: break;
      }
      A.set(static_cast<size_t>(i), static_cast<size_t>(j), a);
      At.set(static_cast<size_t>(i), static_cast<size_t>(j), at);
    }
  }
  const auto ca = char_poly(A);
  const auto ct = char_poly(At);
  TrialResult r;
  r.slack.resize(static_cast<size_t>(m + 1));
  for (long l = 0; l <= m; ++l) {
    const Int diff = ca[static_cast<size_t>(l)] - ct[static_cast<size_t>(l)];
    if (diff == 0) continue;
    r.slack[static_cast<size_t>(l)] = valuation(diff, p).value - required[static_cast<size_t>(l)];
  }
  return r;
}

}  // namespace

LossReport loss_harness(const HodgeBlockShape& shape, long N, long p, long trials, std::uint64_t seed, PerturbationMode mode,
                        unsigned threads) {
  require_prime(p);
  if (trials < 1) throw std::invalid_argument("loss_harness: need at least one trial");
  if (N < 2 * (shape.n + 1))
    throw std::invalid_argument("loss_harness: N = " + std::to_string(N) + " below the hypothesis N >= 2(n+1) = " +
                                std::to_string(2 * (shape.n + 1)));
  const long m = shape.size();
  const HodgePolygon poly = shape.polygon();
  std::vector<long> required;
  for (long l = 0; l <= m; ++l) {
    const Rat h = poly.height(l);
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    required.push_back(N + c.get_si());
  }

  std::vector<TrialResult> results(static_cast<size_t>(trials));
  const unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex mu;
  for (unsigned t = 0; t < nt; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (long k = t; k < trials; k += nt)
          results[static_cast<size_t>(k)] = run_trial(shape, N, p, seed, k, mode, required);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);

  LossReport rep;
  rep.shape = shape;
  rep.p = p;
  rep.N = N;
  rep.trials = trials;
  rep.seed = seed;
  rep.mode = mode;
  rep.min_slack.resize(static_cast<size_t>(m + 1));
  for (long k = 0; k < trials; ++k) {
    for (long l = 0; l <= m; ++l) {
      ++rep.checks;
      const auto& s = results[static_cast<size_t>(k)].slack[static_cast<size_t>(l)];
      if (!s) continue;
      auto& best = rep.min_slack[static_cast<size_t>(l)];
      if (!best || *s < *best) best = *s;
      if (*s < 0) {
        ++rep.violations;
        if (rep.first_violations.size() < 5)
          rep.first_violations.push_back({k, l, *s + required[static_cast<size_t>(l)], required[static_cast<size_t>(l)]});
      }
    }
  }
  return rep;
}

}  // namespace cryslat
