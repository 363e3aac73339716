#include "theta/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace theta {

LaurentPoly LaurentPoly::constant(int num_vars, const BaseScalar& c) {
  LaurentPoly p(num_vars);
  if (!c.is_zero()) p.terms_[Exponents(num_vars, 0)] = c;
  return p;
}

LaurentPoly LaurentPoly::monomial(int num_vars, const Exponents& e,
                                  const BaseScalar& c) {
  if (static_cast<int>(e.size()) != num_vars)
    throw ArityMismatch("exponent vector length mismatch");
  LaurentPoly p(num_vars);
  if (!c.is_zero()) p.terms_[e] = c;
  return p;
}

LaurentPoly LaurentPoly::variable(int num_vars, int i) {
  if (i < 0 || i >= num_vars) throw BadShape("variable index out of range");
  Exponents e(num_vars, 0);
  e[i] = 1;
  return monomial(num_vars, e, BaseScalar::one());
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          terms_.begin()->first == Exponents(nvars_, 0));
}

BaseScalar LaurentPoly::constant_part() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? BaseScalar::zero() : it->second;
}

BaseScalar LaurentPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BaseScalar::zero() : it->second;
}

int LaurentPoly::laurent_degree() const {
  int deg = 0;
  for (const auto& [e, c] : terms_) {
    (void)c;
    int d = 0;
    for (int x : e) d += std::abs(x);
    deg = std::max(deg, d);
  }
  return deg;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw ArityMismatch("variable count mismatch");
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw ArityMismatch("variable count mismatch");
  LaurentPoly r(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::operator*(const BaseScalar& s) const {
  LaurentPoly r(nvars_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_[e] = c * s;
  return r;
}

LaurentPoly LaurentPoly::inverse_monomial() const {
  if (!is_unit_monomial())
    throw NotAUnit("only single-term polynomials are invertible");
  const auto& [e, c] = *terms_.begin();
  Exponents ie(nvars_);
  for (int i = 0; i < nvars_; ++i) ie[i] = -e[i];
  return monomial(nvars_, ie, c.inverse());
}

LaurentPoly LaurentPoly::pow(long e) const {
  if (e < 0) return inverse_monomial().pow(-e);
  LaurentPoly acc = constant(nvars_, BaseScalar::one());
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw ArityMismatch("one image per variable required");
  int out_vars = images.empty() ? 0 : images[0].num_vars();
  for (const auto& im : images)
    if (im.num_vars() != out_vars)
      throw ArityMismatch("images live in different variable counts");
  LaurentPoly r(out_vars);
  for (const auto& [e, c] : terms_) {
    LaurentPoly term = constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) term *= images[i].pow(e[i]);
    r += term;
  }
  return r;
}

BaseScalar LaurentPoly::evaluate(const std::vector<BaseScalar>& values) const {
  if (static_cast<int>(values.size()) != nvars_)
    throw ArityMismatch("one value per variable required");
  BaseScalar acc;
  for (const auto& [e, c] : terms_) {
    BaseScalar term = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) term *= values[i].pow(e[i]);
    acc += term;
  }
  return acc;
}

LaurentPoly LaurentPoly::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != nvars_)
    throw ArityMismatch("permutation length mismatch");
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents pe(nvars_);
    for (int i = 0; i < nvars_; ++i) pe[perm[i]] = e[i];
    r.add_term(pe, c);
  }
  return r;
}

LaurentPoly LaurentPoly::swapped(int i, int j) const {
  std::vector<int> perm(nvars_);
  for (int k = 0; k < nvars_; ++k) perm[k] = k;
  std::swap(perm[i], perm[j]);
  return permuted(perm);
}

bool LaurentPoly::is_symmetric() const {
  for (int i = 0; i + 1 < nvars_; ++i)
    if (!(swapped(i, i + 1) == *this)) return false;
  return true;
}

void LaurentPoly::add_term(const Exponents& e, const BaseScalar& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw ArityMismatch("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      out << "*X" << (i + 1);
      if (e[i] != 1) out << "^" << e[i];
    }
  }
  return out.str();
}

LaurentPoly orbit_sum(int num_vars, const std::vector<int>& exponents) {
  if (static_cast<int>(exponents.size()) != num_vars)
    throw ArityMismatch("exponent vector length mismatch");
  std::vector<int> e = exponents;
  std::sort(e.begin(), e.end());
  LaurentPoly r(num_vars);
  do {
    r.add_term(e, BaseScalar::one());
  } while (std::next_permutation(e.begin(), e.end()));
  return r;
}

LaurentPoly symmetrize(const LaurentPoly& f) {
  int n = f.num_vars();
  // Orbits keyed by the sorted exponent vector; representative coefficient
  // taken from the lexicographically greatest member present in f.
  std::map<std::vector<int>, std::pair<std::vector<int>, BaseScalar>> orbits;
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> key = e;
    std::sort(key.begin(), key.end());
    auto it = orbits.find(key);
    if (it == orbits.end() || e > it->second.first) orbits[key] = {e, c};
  }
  LaurentPoly r(n);
  for (const auto& [key, rep] : orbits) {
    (void)key;
    r += orbit_sum(n, rep.first) * rep.second;
  }
  return r;
}

LaurentPoly elementary_symmetric(int num_vars, int k) {
  if (k < 0 || k > num_vars) throw BadShape("elementary symmetric index out of range");
  std::vector<int> e(num_vars, 0);
  for (int i = 0; i < k; ++i) e[i] = 1;
  return orbit_sum(num_vars, e);
}

}  // namespace theta
