#ifndef THETA_POLY_HPP
#define THETA_POLY_HPP

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "theta/field.hpp"

namespace theta {

inline std::string to_string_coeff(const Rational& c) { return to_string(c); }
inline std::string to_string_coeff(const PFElem& c) { return c.to_string(); }

// Dense univariate polynomial over an exact field. Coefficients are stored
// low degree first; the vector is empty (zero polynomial) or ends in a
// nonzero coefficient.
template <class K>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static Poly constant(const K& v) { return Poly(std::vector<K>{v}); }
  // X - root
  static Poly monic_linear(const K& root) {
    return Poly(std::vector<K>{-root, field_one(root)});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(int i, const K& sample) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return field_zero(sample);
    return c_[i];
  }
  const K& leading() const { return c_.back(); }
  bool is_monic() const {
    return !c_.empty() && field_is_zero(c_.back() - field_one(c_.back()));
  }

  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!field_is_zero(c_[i] - o.c_[i])) return false;
    return true;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  Poly operator+(const Poly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    std::vector<K> r;
    size_t n = std::max(c_.size(), o.c_.size());
    r.reserve(n);
    K zero = field_zero(c_[0]);
    for (size_t i = 0; i < n; ++i) {
      K a = i < c_.size() ? c_[i] : zero;
      K b = i < o.c_.size() ? o.c_[i] : zero;
      r.push_back(a + b);
    }
    return Poly(std::move(r));
  }

  Poly operator-(const Poly& o) const { return *this + (-o); }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    K zero = field_zero(c_[0]);
    std::vector<K> r(c_.size() + o.c_.size() - 1, zero);
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j)
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return Poly(std::move(r));
  }

  Poly scaled(const K& s) const {
    Poly r = *this;
    for (auto& x : r.c_) x = x * s;
    r.normalize();
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(field_inv(c_.back()));
  }

  K eval(const K& x) const {
    if (is_zero()) return field_zero(x);
    K acc = c_.back();
    for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

  std::string to_string(const std::string& var = "X") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      if (field_is_zero(c_[i])) continue;
      if (!first) out << " + ";
      first = false;
      out << "(" << to_string_coeff(c_[i]) << ")";
      if (i > 0) out << var;
      if (i > 1) out << "^" << i;
    }
    return out.str();
  }

private:
  std::vector<K> c_;
  void normalize() {
    while (!c_.empty() && field_is_zero(c_.back())) c_.pop_back();
  }
};

// Quotient and remainder; the divisor needs an invertible leading
// coefficient, which over a field just means it is nonzero.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& num, const Poly<K>& den) {
  if (den.is_zero()) throw BadShape("division by the zero polynomial");
  if (num.degree() < den.degree()) return {Poly<K>(), num};
  K lead_inv = field_inv(den.leading());
  std::vector<K> rem = num.coeffs();
  std::vector<K> quot(num.degree() - den.degree() + 1,
                      field_zero(den.leading()));
  for (int i = num.degree(); i >= den.degree(); --i) {
    K f = rem[i] * lead_inv;
    if (field_is_zero(f)) continue;
    quot[i - den.degree()] = f;
    for (int j = 0; j <= den.degree(); ++j)
      rem[i - den.degree() + j] =
          rem[i - den.degree() + j] - f * den.coeffs()[j];
  }
  return {Poly<K>(std::move(quot)), Poly<K>(std::move(rem))};
}

// Exact division P / C with C monic. Signals NonzeroRemainder when C does
// not divide P, which is how non-image invariant vectors are detected.
template <class K>
Poly<K> divide_exact(const Poly<K>& P, const Poly<K>& C) {
  if (!C.is_monic()) throw BadShape("divisor must be monic");
  if (C.degree() > P.degree()) throw BadShape("divisor degree exceeds dividend");
  auto [q, r] = poly_divmod(P, C);
  if (!r.is_zero())
    throw NonzeroRemainder("polynomial division left a remainder");
  return q;
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    (void)q;
    a = b;
    b = r;
  }
  return a.monic();
}

}  // namespace theta

#endif
