#pragma once

#include "cryslat/arith/capped_residue.hpp"
#include "cryslat/arith/ext_field.hpp"
#include "cryslat/arith/local_rational.hpp"
#include "cryslat/arith/prime_field.hpp"

// Uniform access to 0 and 1 for coefficient rings whose elements carry their
// own modulus. A "prototype" element supplies the context.
namespace cryslat {

inline bool elem_is_zero(const Int& x) { return x == 0; }
inline bool elem_is_zero(const Rat& x) { return x == 0; }
inline bool elem_is_zero(long x) { return x == 0; }
template <class R>
bool elem_is_zero(const R& x) {
  return x.is_zero();
}

inline Int zero_like(const Int&) { return 0; }
inline Rat zero_like(const Rat&) { return 0; }
inline long zero_like(long) { return 0; }
inline PrimeFieldElem zero_like(const PrimeFieldElem& x) { return PrimeFieldElem::unchecked(0, x.modulus()); }
inline ExtFieldElem zero_like(const ExtFieldElem& x) { return ExtFieldElem(x.field(), 0); }
inline LocalRational zero_like(const LocalRational& x) { return LocalRational(0, x.prime()); }
inline CappedResidue zero_like(const CappedResidue& x) { return CappedResidue(0, x.cap(), x.prime()); }

inline Int one_like(const Int&) { return 1; }
inline Rat one_like(const Rat&) { return 1; }
inline long one_like(long) { return 1; }
inline PrimeFieldElem one_like(const PrimeFieldElem& x) { return PrimeFieldElem::unchecked(1, x.modulus()); }
inline ExtFieldElem one_like(const ExtFieldElem& x) { return ExtFieldElem(x.field(), 1); }
inline LocalRational one_like(const LocalRational& x) { return LocalRational(1, x.prime()); }
inline CappedResidue one_like(const CappedResidue& x) { return CappedResidue(1, x.cap(), x.prime()); }

}  // namespace cryslat
