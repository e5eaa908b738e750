#include "cryslat/logdr/invariant.hpp"

#include <stdexcept>

namespace cryslat {

bool GroupCharacter::trivial() const {
  for (long x : c)
    if (x != 0) return false;
  return true;
}

GroupCharacter GroupCharacter::operator+(const GroupCharacter& o) const {
  if (orders != o.orders) throw std::invalid_argument("GroupCharacter: different groups");
  GroupCharacter r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = mod_floor(c[i] + o.c[i], orders[i]);
  return r;
}

GroupCharacter GroupCharacter::operator-(const GroupCharacter& o) const {
  if (orders != o.orders) throw std::invalid_argument("GroupCharacter: different groups");
  GroupCharacter r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = mod_floor(c[i] - o.c[i], orders[i]);
  return r;
}

CharacterContext::CharacterContext(std::vector<int> orders, size_t hyperplane_index, int d)
    : orders_(std::move(orders)), ell_(hyperplane_index), d_(d) {
  if (ell_ >= orders_.size()) throw std::invalid_argument("CharacterContext: hyperplane index out of range");
  for (int a : orders_)
    if (a < 1) throw std::invalid_argument("CharacterContext: group orders must be positive");
}

CharacterContext::CharacterContext(const PairSpec& spec) : CharacterContext(spec.group_orders(), spec.hyperplane_index, spec.d) {}

GroupCharacter CharacterContext::reduce(std::vector<long> c) const {
  for (size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(c[i], orders_[i]);
  return {std::move(c), orders_};
}

GroupCharacter CharacterContext::zero() const { return reduce(std::vector<long>(orders_.size(), 0)); }

GroupCharacter CharacterContext::of_monomial(const Exponent& e) const {
  if (e.size() + 1 != orders_.size()) throw std::invalid_argument("CharacterContext: exponent arity mismatch");
  std::vector<long> c(orders_.size(), 0);
  for (size_t i = 0; i < e.size(); ++i) {
    const size_t proj = i < ell_ ? i : i + 1;
    c[proj] += e[i];
    c[ell_] -= e[i];
  }
  return reduce(std::move(c));
}

GroupCharacter CharacterContext::of_dx(size_t affine_var) const {
  Exponent e(orders_.size() - 1, 0);
  e.at(affine_var) = 1;
  return of_monomial(e);
}

GroupCharacter CharacterContext::of_q() const {
  std::vector<long> c(orders_.size(), 0);
  c[ell_] = -d_;
  return reduce(std::move(c));
}

GroupCharacter CharacterContext::of_omega() const {
  GroupCharacter w = zero();
  for (size_t i = 0; i + 1 < orders_.size(); ++i) w = w + of_dx(i);
  return w - of_q();
}

GroupCharacter CharacterContext::of(const FormGenerator& g) const {
  GroupCharacter r = of_monomial(g.monomial);
  if (g.omega) return r + of_omega();
  for (size_t i : g.subset) r = r + of_dx(i);
  return r;
}

bool CharacterContext::invariant_omega_monomial(const Exponent& m) const { return (of_monomial(m) + of_omega()).trivial(); }

std::vector<FormGenerator> invariant_filter(const std::vector<FormGenerator>& gens, const CharacterContext& ctx) {
  std::vector<FormGenerator> out;
  for (const auto& g : gens)
    if (ctx.of(g).trivial()) out.push_back(g);
  return out;
}

std::vector<FormGenerator> invariant_filter(const std::vector<FormGenerator>& gens, const std::vector<int>& weights,
                                            size_t hyperplane_index, int d) {
  return invariant_filter(gens, CharacterContext(weights, hyperplane_index, d));
}

}  // namespace cryslat
