#include "theta/supports.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace theta {

CuspidalSymbol CuspidalSymbol::make(const std::string& label, int size,
                                    const std::string& dual_label) {
  if (size < 1) throw BadShape("cuspidal symbol size must be positive");
  if (label.empty() || dual_label.empty())
    throw BadShape("cuspidal symbol labels must be nonempty");
  return {label, size, dual_label};
}

namespace {

void require_unit_twist(const BaseScalar& t) {
  if (!t.is_unit())
    throw NonInvertibleEntry("twists must be single-term units");
}

}  // namespace

Support::Support(std::vector<SupportElement> elems) : elems_(std::move(elems)) {
  rank_ = 0;
  for (const auto& e : elems_) {
    require_unit_twist(e.twist);
    if (!(e.symbol.dual().dual() == e.symbol))
      throw BadShape("symbol duality must be an involution");
    rank_ += e.symbol.size;
  }
  std::sort(elems_.begin(), elems_.end());
}

std::string Support::to_string() const {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& e : elems_) {
    if (!first) out << ", ";
    first = false;
    out << "(" << e.symbol.label << "[" << e.symbol.size << "], "
        << e.twist.to_string() << ")";
  }
  out << "}";
  return out.str();
}

Support theta_support(const Support& s, int n) {
  int m = s.group_rank();
  if (m > n) throw BadShape("support rank exceeds the target rank");
  std::vector<SupportElement> out;
  out.reserve(s.elements().size() + (n - m));
  BaseScalar shift = BaseScalar::v_power(-(n - m));
  for (const auto& e : s.elements())
    out.push_back({e.symbol.dual(), e.twist.inverse() * shift});
  // Appended chain: exponents 2(m+j-n)+(n-1) for j = 1..n-m are the doubled
  // characters (m+1-n)+(n-1)/2, ..., (n-1)/2.
  for (int j = 1; j <= n - m; ++j)
    out.push_back({CuspidalSymbol::unramified(),
                   BaseScalar::v_power(2 * (m + j - n) + (n - 1))});
  return Support(std::move(out));
}

Support trivial_rep_support(int n) {
  if (n < 1) throw BadShape("rank must be positive");
  std::vector<SupportElement> out;
  out.reserve(n);
  for (int j = 1; j <= n; ++j)
    out.push_back({CuspidalSymbol::unramified(),
                   BaseScalar::v_power(n - 1 - 2 * (j - 1))});
  return Support(std::move(out));
}

Support twist_support(const Support& s, const BaseScalar& a) {
  require_unit_twist(a);
  std::vector<SupportElement> out = s.elements();
  for (auto& e : out) e.twist = e.twist * a;
  return Support(std::move(out));
}

bool support_equal(const Support& s1, const Support& s2,
                   const std::optional<Specialization>& spec) {
  if (!spec) return s1 == s2;
  if (s1.elements().size() != s2.elements().size()) return false;
  using Key = std::tuple<std::string, int, long, long>;
  auto keys = [&](const Support& s) {
    std::vector<Key> ks;
    ks.reserve(s.elements().size());
    for (const auto& e : s.elements()) {
      PFElem img = specialize(e.twist, *spec);
      ks.emplace_back(e.symbol.label, e.symbol.size, img.a(), img.b());
    }
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  return keys(s1) == keys(s2);
}

bool theta_inductive_check(int m, int k, int n, const Support& s) {
  if (!(1 <= m && m <= k && k <= n)) throw BadShape("need 1 <= m <= k <= n");
  if (s.group_rank() != m) throw BadShape("support rank must equal m");
  Support direct = theta_support(s, n);
  Support staged = theta_support(theta_support(theta_support(s, k), k), n);
  return support_equal(direct, staged);
}

}  // namespace theta
