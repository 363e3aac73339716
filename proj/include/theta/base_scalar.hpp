#ifndef THETA_BASE_SCALAR_HPP
#define THETA_BASE_SCALAR_HPP

#include <cstdint>
#include <map>
#include <string>

#include "theta/errors.hpp"
#include "theta/rational.hpp"

namespace theta {

// Residual data of the local situation: p, f and q = p^f.
struct RingContext {
  long p = 2;
  long f = 1;
  long q = 2;

  RingContext() = default;
  RingContext(long p_, long f_);

  bool operator==(const RingContext&) const = default;
};

bool is_prime(long n);

// Laurent polynomial in one formal unit v with exact rational coefficients.
//
// v is a free variable: no relation v^2 = q is ever imposed on the ring
// itself (q enters only through specializations, where the chosen image of
// v squares to q). Values are kept canonical: the term map never stores a
// zero coefficient, so equality of values is equality of maps.
class BaseScalar {
public:
  BaseScalar() = default;
  explicit BaseScalar(const Rational& c) {
    if (c != 0) terms_[0] = c;
  }
  BaseScalar(long num, long den = 1) : BaseScalar(make_rational(num, den)) {}

  static BaseScalar zero() { return BaseScalar(); }
  static BaseScalar one() { return BaseScalar(Rational(1)); }
  // c * v^k
  static BaseScalar term(const Rational& c, int vpow);
  static BaseScalar v_power(int k) { return term(Rational(1), k); }

  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Units of Q[v^{+-1}] are exactly the single-term values.
  bool is_unit() const { return terms_.size() == 1; }
  bool is_rational() const;
  Rational rational_part() const;  // requires a constant (or zero) value

  int min_vpow() const;  // requires nonzero
  int max_vpow() const;

  BaseScalar operator-() const;
  BaseScalar operator+(const BaseScalar& o) const;
  BaseScalar operator-(const BaseScalar& o) const;
  BaseScalar operator*(const BaseScalar& o) const;
  BaseScalar& operator+=(const BaseScalar& o) { return *this = *this + o; }
  BaseScalar& operator-=(const BaseScalar& o) { return *this = *this - o; }
  BaseScalar& operator*=(const BaseScalar& o) { return *this = *this * o; }
  bool operator==(const BaseScalar& o) const { return terms_ == o.terms_; }

  BaseScalar inverse() const;       // unit values only (NotAUnit otherwise)
  BaseScalar pow(long e) const;     // negative e requires a unit

  // True iff every coefficient lies in Z[1/p].
  bool denominators_p_smooth(long p) const;

  // Deterministic total order; used for canonical multiset sorting.
  static int compare(const BaseScalar& a, const BaseScalar& b);
  bool operator<(const BaseScalar& o) const { return compare(*this, o) < 0; }

  std::string to_string() const;  // e.g. "3/2*v^-1 + 1 + v^2"

private:
  std::map<int, Rational> terms_;
};

}  // namespace theta

#endif
