#ifndef THETA_RATIONAL_HPP
#define THETA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace theta {

// Exact rational numbers. GMP keeps values canonical (gcd 1, positive
// denominator), which the whole toolkit relies on for term-map equality.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rational_from_strings(const std::string& num,
                                      const std::string& den) {
  Rational r(Integer(num), Integer(den));
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// True iff every prime factor of the denominator divides p, i.e. the value
// lies in Z[1/p].
inline bool denominator_p_smooth(const Rational& r, const Integer& p) {
  Integer den = r.get_den();
  while (den != 1) {
    if (den % p != 0) return false;
    den /= p;
  }
  return true;
}

}  // namespace theta

#endif
