#include "cryslat/arith/sparse_poly.hpp"

namespace cryslat {

namespace {

void fill(size_t nvars, long remaining, size_t pos, Exponent& cur, std::vector<Exponent>& out, bool exact) {
  if (pos + 1 == nvars) {
    if (exact) {
      cur[pos] = static_cast<int>(remaining);
      out.push_back(cur);
    } else {
      for (long a = 0; a <= remaining; ++a) {
        cur[pos] = static_cast<int>(a);
        out.push_back(cur);
      }
    }
    return;
  }
  for (long a = 0; a <= remaining; ++a) {
    cur[pos] = static_cast<int>(a);
    fill(nvars, remaining - a, pos + 1, cur, out, exact);
  }
}

}  // namespace

std::vector<Exponent> monomials_up_to(size_t nvars, long max_degree) {
  std::vector<Exponent> out;
  if (max_degree < 0) return out;
  if (nvars == 0) return {Exponent{}};
  Exponent cur(nvars, 0);
  fill(nvars, max_degree, 0, cur, out, false);
  return out;
}

std::vector<Exponent> monomials_of_degree(size_t nvars, long degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  if (nvars == 0) return degree == 0 ? std::vector<Exponent>{Exponent{}} : out;
  Exponent cur(nvars, 0);
  fill(nvars, degree, 0, cur, out, true);
  return out;
}

}  // namespace cryslat
