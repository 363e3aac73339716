#ifndef THETA_SUPPORTS_HPP
#define THETA_SUPPORTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "theta/base_scalar.hpp"
#include "theta/prime_field.hpp"

namespace theta {

// Opaque cuspidal datum living on a block GL_d. Symbols are rigid: equality
// is label equality and the only structure carried is the duality
// involution. The unramified symbol "1" (size 1) is self-dual.
struct CuspidalSymbol {
  std::string label;
  int size = 1;
  std::string dual_label;

  static CuspidalSymbol unramified() { return {"1", 1, "1"}; }
  static CuspidalSymbol make(const std::string& label, int size,
                             const std::string& dual_label);

  CuspidalSymbol dual() const { return {dual_label, size, label}; }
  bool operator==(const CuspidalSymbol&) const = default;
  bool operator<(const CuspidalSymbol& o) const {
    if (label != o.label) return label < o.label;
    if (size != o.size) return size < o.size;
    return dual_label < o.dual_label;
  }
};

// One (cuspidal symbol, unramified twist) pair. Twists are single-term
// invertible scalars r*v^k; the convention is that the character |.|^a has
// twist v^{2a}.
struct SupportElement {
  CuspidalSymbol symbol;
  BaseScalar twist;

  bool operator==(const SupportElement&) const = default;
  bool operator<(const SupportElement& o) const {
    if (!(symbol == o.symbol)) return symbol < o.symbol;
    return twist < o.twist;
  }
};

// Multiset of support elements; the element list is kept sorted so that
// structural equality is association-class equality.
class Support {
public:
  explicit Support(std::vector<SupportElement> elems);

  const std::vector<SupportElement>& elements() const { return elems_; }
  int group_rank() const { return rank_; }

  bool operator==(const Support& o) const = default;

  std::string to_string() const;

private:
  std::vector<SupportElement> elems_;
  int rank_ = 0;
};

// Transfer of a support on G_m into G_n: dualize symbols, invert and shift
// twists by v^{-(n-m)}, then append the unramified chain
// v^{2(m+1-n)+(n-1)}, v^{2(m+2-n)+(n-1)}, ..., v^{n-1}.
Support theta_support(const Support& s, int n);

// Support of the trivial character of GL_n: the geometric chain
// {v^{n-1}, v^{n-3}, ..., v^{-(n-1)}} on unramified symbols.
Support trivial_rep_support(int n);

// Entrywise twist by a single-term unit.
Support twist_support(const Support& s, const BaseScalar& a);

// Multiset equality; with a specialization, symbols still compare exactly
// but twists compare after mapping v into the target field.
bool support_equal(const Support& s1, const Support& s2,
                   const std::optional<Specialization>& spec = std::nullopt);

// Checks the composition identity through an intermediate rank k:
// transfer m->n equals m->k, then the k=k duality, then k->n.
bool theta_inductive_check(int m, int k, int n, const Support& s);

}  // namespace theta

#endif
