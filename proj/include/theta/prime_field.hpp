#ifndef THETA_PRIME_FIELD_HPP
#define THETA_PRIME_FIELD_HPP

#include <optional>
#include <string>

#include "theta/base_scalar.hpp"
#include "theta/errors.hpp"

namespace theta {

// Descriptor of F_ell or of its quadratic extension F_{ell^2}, realized as
// F_ell[u]/(u^2 - eps) with eps the smallest quadratic non-residue mod ell.
struct FqField {
  long ell = 2;
  bool ext = false;
  long nonresidue = 0;

  static FqField prime(long ell);
  static FqField quadratic(long ell);

  bool operator==(const FqField&) const = default;
  std::string name() const;
};

long smallest_nonresidue(long ell);

// Element a + b*u of the (possibly extended) prime field.
class PFElem {
public:
  PFElem() = default;
  PFElem(const FqField& fld, long a, long b = 0);

  static PFElem zero(const FqField& f) { return PFElem(f, 0); }
  static PFElem one(const FqField& f) { return PFElem(f, 1); }

  const FqField& field() const { return fld_; }
  long a() const { return a_; }
  long b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool in_prime_subfield() const { return b_ == 0; }

  PFElem operator-() const;
  PFElem operator+(const PFElem& o) const;
  PFElem operator-(const PFElem& o) const;
  PFElem operator*(const PFElem& o) const;
  PFElem& operator+=(const PFElem& o) { return *this = *this + o; }
  PFElem& operator-=(const PFElem& o) { return *this = *this - o; }
  PFElem& operator*=(const PFElem& o) { return *this = *this * o; }
  bool operator==(const PFElem& o) const;
  bool operator<(const PFElem& o) const;  // deterministic order for sorting

  PFElem inverse() const;
  PFElem pow(long e) const;

  std::string to_string() const;

private:
  FqField fld_;
  long a_ = 0, b_ = 0;
  void check_same(const PFElem& o) const;
};

// A ring map Q[v^{+-1}] -> F_ell or F_{ell^2} determined by the image of v.
// Valid only when v_image^2 equals q in the target and ell != p.
struct Specialization {
  RingContext ring;
  FqField target;
  PFElem v_image;

  Specialization(const RingContext& ring_, const FqField& target_,
                 const PFElem& v_image_);
};

PFElem specialize(const BaseScalar& x, const Specialization& s);

// Deterministic square root of q modulo ell: the smallest root in F_ell if
// one exists, otherwise the smallest c*u in F_{ell^2}. Empty only when
// ell = p (no valid target).
std::optional<Specialization> sqrt_q_specialization(const RingContext& ring,
                                                    long ell);

}  // namespace theta

#endif
