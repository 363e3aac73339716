#include "theta/base_scalar.hpp"

#include <sstream>

namespace theta {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RingContext::RingContext(long p_, long f_) : p(p_), f(f_) {
  if (!is_prime(p)) throw BadShape("residual characteristic must be prime");
  if (f < 1) throw BadShape("field degree must be positive");
  q = 1;
  for (long i = 0; i < f; ++i) {
    q *= p;
    if (q > (1L << 40)) throw TooLarge("residual cardinal out of range");
  }
}

BaseScalar BaseScalar::term(const Rational& c, int vpow) {
  BaseScalar s;
  if (c != 0) s.terms_[vpow] = c;
  return s;
}

bool BaseScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 &&
         terms_.begin()->second == 1;
}

bool BaseScalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational BaseScalar::rational_part() const {
  if (is_zero()) return Rational(0);
  if (!is_rational()) throw NotAUnit("value is not a constant");
  return terms_.begin()->second;
}

int BaseScalar::min_vpow() const {
  if (is_zero()) throw NotAUnit("zero has no v-degree");
  return terms_.begin()->first;
}

int BaseScalar::max_vpow() const {
  if (is_zero()) throw NotAUnit("zero has no v-degree");
  return terms_.rbegin()->first;
}

BaseScalar BaseScalar::operator-() const {
  BaseScalar r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

BaseScalar BaseScalar::operator+(const BaseScalar& o) const {
  BaseScalar r = *this;
  for (const auto& [k, c] : o.terms_) {
    auto it = r.terms_.find(k);
    if (it == r.terms_.end()) {
      r.terms_[k] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

BaseScalar BaseScalar::operator-(const BaseScalar& o) const {
  return *this + (-o);
}

BaseScalar BaseScalar::operator*(const BaseScalar& o) const {
  BaseScalar r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      int k = ka + kb;
      auto it = r.terms_.find(k);
      if (it == r.terms_.end()) {
        Rational prod = ca * cb;
        if (prod != 0) r.terms_[k] = prod;
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

BaseScalar BaseScalar::inverse() const {
  if (!is_unit()) throw NotAUnit("only single-term values are invertible");
  const auto& [k, c] = *terms_.begin();
  return term(1 / c, -k);
}

BaseScalar BaseScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  BaseScalar acc = one();
  BaseScalar base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool BaseScalar::denominators_p_smooth(long p) const {
  Integer P(p);
  for (const auto& [k, c] : terms_) {
    (void)k;
    if (!denominator_p_smooth(c, P)) return false;
  }
  return true;
}

int BaseScalar::compare(const BaseScalar& a, const BaseScalar& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    int c = cmp(ia->second, ib->second);
    if (c != 0) return c;
  }
  if (ia != a.terms_.end()) return 1;
  if (ib != b.terms_.end()) return -1;
  return 0;
}

std::string BaseScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (k == 0) {
      out << theta::to_string(a);
    } else {
      if (a != 1) out << theta::to_string(a) << "*";
      out << "v";
      if (k != 1) out << "^" << k;
    }
  }
  return out.str();
}

}  // namespace theta
