#ifndef THETA_FIELD_HPP
#define THETA_FIELD_HPP

#include "theta/errors.hpp"
#include "theta/prime_field.hpp"
#include "theta/rational.hpp"

namespace theta {

// Customization points used by the generic polynomial and matrix code.
// Zero and one are derived from a sample element so that fields carrying a
// runtime descriptor (F_ell, F_ell^2) produce values of the right field.

inline Rational field_zero(const Rational&) { return Rational(0); }
inline Rational field_one(const Rational&) { return Rational(1); }
inline bool field_is_zero(const Rational& x) { return x == 0; }
inline Rational field_inv(const Rational& x) {
  if (x == 0) throw NonInvertibleEntry("division by zero");
  return 1 / x;
}

inline PFElem field_zero(const PFElem& s) { return PFElem::zero(s.field()); }
inline PFElem field_one(const PFElem& s) { return PFElem::one(s.field()); }
inline bool field_is_zero(const PFElem& x) { return x.is_zero(); }
inline PFElem field_inv(const PFElem& x) { return x.inverse(); }

}  // namespace theta

#endif
