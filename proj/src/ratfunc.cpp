#include "theta/ratfunc.hpp"

namespace theta {

void RatFunc::assign(const Poly<Rational>& n, const Poly<Rational>& d) {
  if (d.is_zero()) throw NonInvertibleEntry("zero denominator");
  if (n.is_zero()) {
    num_ = Poly<Rational>();
    den_ = Poly<Rational>::constant(Rational(1));
    return;
  }
  Poly<Rational> g = poly_gcd(n, d);
  Poly<Rational> nn = divide_exact(n, g);
  Poly<Rational> dd = divide_exact(d, g);
  Rational lead = dd.leading();
  num_ = nn.scaled(1 / lead);
  den_ = dd.scaled(1 / lead);
}

RatFunc RatFunc::v_power(int k) {
  if (k >= 0) {
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = 1;
    return RatFunc(Poly<Rational>(std::move(c)),
                   Poly<Rational>::constant(Rational(1)));
  }
  std::vector<Rational> c(-k + 1, Rational(0));
  c[-k] = 1;
  return RatFunc(Poly<Rational>::constant(Rational(1)),
                 Poly<Rational>(std::move(c)));
}

RatFunc RatFunc::from_base_scalar(const BaseScalar& x) {
  if (x.is_zero()) return RatFunc();
  int shift = std::min(0, x.min_vpow());
  std::vector<Rational> num(x.max_vpow() - shift + 1, Rational(0));
  for (const auto& [k, c] : x.terms()) num[k - shift] = c;
  std::vector<Rational> den(-shift + 1, Rational(0));
  den[-shift] = 1;
  return RatFunc(Poly<Rational>(std::move(num)),
                 Poly<Rational>(std::move(den)));
}

std::optional<BaseScalar> RatFunc::to_base_scalar() const {
  if (is_zero()) return BaseScalar::zero();
  int nonzero = 0, pow = 0;
  for (int i = 0; i <= den_.degree(); ++i)
    if (den_.coeffs()[i] != 0) {
      ++nonzero;
      pow = i;
    }
  if (nonzero != 1) return std::nullopt;
  Rational d = den_.coeffs()[pow];
  BaseScalar out;
  for (int i = 0; i <= num_.degree(); ++i)
    out += BaseScalar::term(num_.coeffs()[i] / d, i - pow);
  return out;
}

std::string RatFunc::to_string() const {
  if (den_ == Poly<Rational>::constant(Rational(1)))
    return num_.to_string("v");
  return "(" + num_.to_string("v") + ")/(" + den_.to_string("v") + ")";
}

}  // namespace theta
