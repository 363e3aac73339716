#ifndef THETA_RATFUNC_HPP
#define THETA_RATFUNC_HPP

#include <optional>
#include <string>

#include "theta/base_scalar.hpp"
#include "theta/poly.hpp"

namespace theta {

// Univariate rational function in the formal unit v over the exact
// rationals: the fraction field Q(v). Values are kept normalized with a
// monic denominator coprime to the numerator.
class RatFunc {
public:
  RatFunc() : num_(), den_(Poly<Rational>::constant(Rational(1))) {}
  explicit RatFunc(const Rational& c)
      : num_(Poly<Rational>::constant(c)),
        den_(Poly<Rational>::constant(Rational(1))) {}
  RatFunc(Poly<Rational> num, Poly<Rational> den) { assign(num, den); }

  static RatFunc v() {
    return RatFunc(Poly<Rational>({Rational(0), Rational(1)}),
                   Poly<Rational>::constant(Rational(1)));
  }

  // v^k for any integer k.
  static RatFunc v_power(int k);

  static RatFunc from_base_scalar(const BaseScalar& x);
  // Defined exactly when the denominator is a monomial c*v^k, i.e. when the
  // value lies in Q[v^{+-1}].
  std::optional<BaseScalar> to_base_scalar() const;

  const Poly<Rational>& num() const { return num_; }
  const Poly<Rational>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  RatFunc inverse() const {
    if (is_zero()) throw NonInvertibleEntry("division by zero");
    return RatFunc(den_, num_);
  }

  std::string to_string() const;

private:
  Poly<Rational> num_, den_;
  void assign(const Poly<Rational>& n, const Poly<Rational>& d);
};

inline RatFunc field_zero(const RatFunc&) { return RatFunc(); }
inline RatFunc field_one(const RatFunc&) { return RatFunc(Rational(1)); }
inline bool field_is_zero(const RatFunc& x) { return x.is_zero(); }
inline RatFunc field_inv(const RatFunc& x) { return x.inverse(); }

inline std::string to_string_coeff(const RatFunc& c) { return c.to_string(); }

}  // namespace theta

#endif
