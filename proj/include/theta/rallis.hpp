#ifndef THETA_RALLIS_HPP
#define THETA_RALLIS_HPP

#include <vector>

#include "theta/laurent.hpp"

namespace theta {

// Transfer homomorphism between Laurent polynomial rings in n and m
// variables (m <= n):
//
//   X_i  ->  v^{-(n-m)} X_i^{-1}          1 <= i <= m
//   X_i  ->  v^{2(i-n)+(n-1)}  (constant) m+1 <= i <= n
//
// The constants form a geometric chain with ratio v^2; at n = m the map
// degenerates to the variable-inversion involution.
struct RallisMap {
  int n = 0;
  int m = 0;
  std::vector<LaurentPoly> images;  // length n, each in m variables
};

RallisMap build_rallis(int n, int m);

LaurentPoly apply_rallis(const RallisMap& map, const LaurentPoly& f);

// Unramified parameter tuple: invertible scalars, kept in a fixed order so
// that evaluation against a polynomial is well defined entrywise. Multiset
// comparisons sort first.
struct ParameterPoint {
  std::vector<BaseScalar> entries;
};

ParameterPoint point_image(const ParameterPoint& a, int n);

bool point_multiset_equal(const ParameterPoint& a, const ParameterPoint& b);

// Searches a symmetric f in n variables with apply_rallis(f) = g, where g
// is S_m-invariant. The search expands images of orbit-sum monomials of
// Laurent degree <= bound against g in the monomial basis and solves the
// resulting linear system exactly; on failure the bound doubles, up to
// four retries. bound <= 0 selects the default deg(g) + (n-m) + 2.
LaurentPoly invariant_preimage(const RallisMap& map, const LaurentPoly& g,
                               int bound = 0);

}  // namespace theta

#endif
