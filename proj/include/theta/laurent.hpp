#ifndef THETA_LAURENT_HPP
#define THETA_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "theta/base_scalar.hpp"

namespace theta {

// Sparse Laurent polynomial in X_1..X_n over BaseScalar. Exponent vectors
// have fixed length n and may carry negative entries; the term map never
// stores a zero coefficient, so structural equality is value equality.
class LaurentPoly {
public:
  using Exponents = std::vector<int>;

  explicit LaurentPoly(int num_vars) : nvars_(num_vars) {
    if (num_vars < 0) throw BadShape("negative variable count");
  }

  static LaurentPoly constant(int num_vars, const BaseScalar& c);
  static LaurentPoly monomial(int num_vars, const Exponents& e,
                              const BaseScalar& c);
  static LaurentPoly variable(int num_vars, int i);  // X_{i+1}

  int num_vars() const { return nvars_; }
  const std::map<Exponents, BaseScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BaseScalar constant_part() const;
  BaseScalar coeff(const Exponents& e) const;

  // Max over monomials of sum |e_i| (Laurent total degree); 0 when zero.
  int laurent_degree() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly operator*(const BaseScalar& s) const;
  bool operator==(const LaurentPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  // Negative powers require a single-term (unit) polynomial.
  LaurentPoly pow(long e) const;
  bool is_unit_monomial() const { return terms_.size() == 1; }
  LaurentPoly inverse_monomial() const;

  // Ring homomorphism X_i -> images[i]; images live in a common variable
  // count. Monomials with negative exponents need invertible images.
  LaurentPoly substitute(const std::vector<LaurentPoly>& images) const;

  // Full evaluation at invertible scalar values, X_i -> values[i].
  BaseScalar evaluate(const std::vector<BaseScalar>& values) const;

  LaurentPoly permuted(const std::vector<int>& perm) const;
  LaurentPoly swapped(int i, int j) const;
  // Invariance under all adjacent transpositions (they generate S_n).
  bool is_symmetric() const;

  void add_term(const Exponents& e, const BaseScalar& c);

  std::string to_string() const;

private:
  int nvars_;
  std::map<Exponents, BaseScalar> terms_;
};

// Sum of the distinct monomials in the S_n-orbit of X^e, coefficient one on
// each. The orbit is enumerated once per distinct rearrangement, so no
// division is involved.
LaurentPoly orbit_sum(int num_vars, const std::vector<int>& exponents);

// Orbit-sum symmetrization of f: every monomial orbit meeting the support
// of f contributes once, with the coefficient f carries on the orbit's
// lexicographically greatest exponent vector present in f.
LaurentPoly symmetrize(const LaurentPoly& f);

// Elementary symmetric polynomial e_k in the given number of variables.
LaurentPoly elementary_symmetric(int num_vars, int k);

}  // namespace theta

#endif
