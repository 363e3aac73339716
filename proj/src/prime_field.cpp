#include "theta/prime_field.hpp"

#include <sstream>

namespace theta {

namespace {

long mod_pos(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

long mod_inverse(long x, long m) {
  long t = 0, nt = 1, r = m, nr = mod_pos(x, m);
  while (nr != 0) {
    long qt = r / nr;
    t -= qt * nt;
    std::swap(t, nt);
    r -= qt * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw NonInvertibleEntry("element not invertible mod ell");
  return mod_pos(t, m);
}

long rational_mod(const Rational& c, long ell) {
  long num = static_cast<long>(mpz_fdiv_ui(c.get_num().get_mpz_t(), ell));
  long den = static_cast<long>(mpz_fdiv_ui(c.get_den().get_mpz_t(), ell));
  if (den == 0)
    throw InvalidSpecialization("coefficient denominator vanishes mod ell");
  return mod_pos(num * mod_inverse(den, ell), ell);
}

}  // namespace

long smallest_nonresidue(long ell) {
  if (ell == 2) throw BadShape("F_4 is not generated by a non-residue");
  std::vector<bool> residue(ell, false);
  for (long x = 0; x < ell; ++x) residue[(x * x) % ell] = true;
  for (long e = 2; e < ell; ++e)
    if (!residue[e]) return e;
  throw BadShape("no quadratic non-residue found");
}

FqField FqField::prime(long ell) {
  if (!is_prime(ell)) throw BadShape("modulus must be prime");
  return FqField{ell, false, 0};
}

FqField FqField::quadratic(long ell) {
  if (!is_prime(ell)) throw BadShape("modulus must be prime");
  return FqField{ell, true, smallest_nonresidue(ell)};
}

std::string FqField::name() const {
  std::ostringstream out;
  out << "F_" << ell;
  if (ext) out << "^2";
  return out.str();
}

PFElem::PFElem(const FqField& fld, long a, long b) : fld_(fld) {
  a_ = mod_pos(a, fld.ell);
  b_ = mod_pos(b, fld.ell);
  if (!fld.ext && b_ != 0)
    throw BadShape("extension coordinate in a prime field");
}

void PFElem::check_same(const PFElem& o) const {
  if (!(fld_ == o.fld_)) throw BadShape("mixed field arithmetic");
}

PFElem PFElem::operator-() const { return PFElem(fld_, -a_, -b_); }

PFElem PFElem::operator+(const PFElem& o) const {
  check_same(o);
  return PFElem(fld_, a_ + o.a_, b_ + o.b_);
}

PFElem PFElem::operator-(const PFElem& o) const {
  check_same(o);
  return PFElem(fld_, a_ - o.a_, b_ - o.b_);
}

PFElem PFElem::operator*(const PFElem& o) const {
  check_same(o);
  long ell = fld_.ell;
  if (!fld_.ext) return PFElem(fld_, (a_ * o.a_) % ell);
  long eps = fld_.nonresidue;
  long a = (a_ * o.a_ + ((b_ * o.b_) % ell) * eps) % ell;
  long b = (a_ * o.b_ + b_ * o.a_) % ell;
  return PFElem(fld_, a, b);
}

bool PFElem::operator==(const PFElem& o) const {
  return fld_ == o.fld_ && a_ == o.a_ && b_ == o.b_;
}

bool PFElem::operator<(const PFElem& o) const {
  if (a_ != o.a_) return a_ < o.a_;
  return b_ < o.b_;
}

PFElem PFElem::inverse() const {
  if (is_zero()) throw NonInvertibleEntry("zero is not invertible");
  long ell = fld_.ell;
  if (!fld_.ext) return PFElem(fld_, mod_inverse(a_, ell));
  // (a + bu)^-1 = (a - bu) / (a^2 - eps b^2); the norm is nonzero because
  // eps is a non-residue.
  long norm = mod_pos(a_ * a_ - ((b_ * b_) % ell) * fld_.nonresidue, ell);
  long ninv = mod_inverse(norm, ell);
  return PFElem(fld_, a_ * ninv, -b_ * ninv);
}

PFElem PFElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  PFElem acc = one(fld_);
  PFElem base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string PFElem::to_string() const {
  std::ostringstream out;
  if (b_ == 0) {
    out << a_;
  } else {
    out << a_ << "+" << b_ << "u";
  }
  return out.str();
}

Specialization::Specialization(const RingContext& ring_, const FqField& target_,
                               const PFElem& v_image_)
    : ring(ring_), target(target_), v_image(v_image_) {
  if (target.ell == ring.p)
    throw CharacteristicClash("target characteristic equals p");
  if (!(v_image.field() == target))
    throw InvalidSpecialization("v image lives in a different field");
  PFElem q_img(target, ring.q % target.ell);
  if (!(v_image * v_image == q_img))
    throw InvalidSpecialization("v image does not square to q");
}

PFElem specialize(const BaseScalar& x, const Specialization& s) {
  PFElem acc = PFElem::zero(s.target);
  for (const auto& [k, c] : x.terms()) {
    PFElem coeff(s.target, rational_mod(c, s.target.ell));
    acc += coeff * s.v_image.pow(k);
  }
  return acc;
}

std::optional<Specialization> sqrt_q_specialization(const RingContext& ring,
                                                    long ell) {
  if (ell == ring.p) return std::nullopt;
  long q = mod_pos(ring.q, ell);
  for (long x = 0; x < ell; ++x)
    if ((x * x) % ell == q)
      return Specialization(ring, FqField::prime(ell),
                            PFElem(FqField::prime(ell), x));
  // q is a non-residue: sqrt(q) = c*u with c^2 * eps = q.
  FqField f2 = FqField::quadratic(ell);
  for (long c = 1; c < ell; ++c)
    if ((((c * c) % ell) * f2.nonresidue) % ell == q)
      return Specialization(ring, f2, PFElem(f2, 0, c));
  throw BadShape("square root of q not found in F_ell^2");
}

}  // namespace theta
