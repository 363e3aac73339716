#ifndef THETA_STRATA_HPP
#define THETA_STRATA_HPP

#include <cstdint>
#include <vector>

#include "theta/errors.hpp"
#include "theta/rational.hpp"

namespace theta {

// Small finite field F_q, q = p^f with f <= 3, with precomputed operation
// tables. Elements are indices 0..q-1 encoding coefficient vectors in the
// fixed polynomial basis (index = sum digit_i p^i). The defining
// irreducible polynomials come from a fixed table so enumeration order is
// reproducible.
class GFTable {
public:
  static const GFTable& get(long q);

  long p() const { return p_; }
  long f() const { return f_; }
  long q() const { return q_; }

  uint16_t add(uint16_t a, uint16_t b) const { return add_[a * q_ + b]; }
  uint16_t mul(uint16_t a, uint16_t b) const { return mul_[a * q_ + b]; }
  uint16_t neg(uint16_t a) const { return neg_[a]; }
  uint16_t inv(uint16_t a) const;
  // Smallest index generating the multiplicative group.
  uint16_t multiplicative_generator() const { return gen_; }

private:
  GFTable(long p, long f);
  long p_, f_, q_;
  std::vector<uint16_t> add_, mul_, neg_, inv_;
  uint16_t gen_;
};

// Census of the rank stratification of the n x m matrix space over F_q:
// stratum sizes, open-union sizes, stabilizer orders and the two group
// orders, all exact.
struct StrataReport {
  int n = 0, m = 0;
  long q = 0;
  std::vector<Integer> counts;             // |O_k|, k = 0..min(n,m)
  std::vector<Integer> cumulative;         // |U_k| = sum_{l>=k} |O_l|
  std::vector<Integer> stabilizer_orders;  // |St_k|
  Integer gl_n, gl_m;
};

Integer gl_order(int r, long q);

// |St_k| = |GL_k| |GL_{n-k}| |GL_{m-k}| q^{k(n-k)+k(m-k)}.
Integer stabilizer_order(int n, int m, int k, long q);

// Exhaustive census by rank over all q^{nm} matrices. Guarded by
// q^{nm} <= 2^24.
StrataReport enumerate_strata(int n, int m, long q);

// Breadth-first closure of the rank-k representative under left and right
// multiplication by generators of GL_n(F_q) and GL_m(F_q); true iff it
// covers the whole stratum.
bool orbit_transitivity_check(int n, int m, int k, long q);

}  // namespace theta

#endif
