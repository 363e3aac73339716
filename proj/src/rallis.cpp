#include "theta/rallis.hpp"

#include <algorithm>
#include <map>

#include "theta/ratfunc.hpp"

namespace theta {

RallisMap build_rallis(int n, int m) {
  if (m < 1 || m > n) throw BadShape("need 1 <= m <= n");
  RallisMap map;
  map.n = n;
  map.m = m;
  map.images.reserve(n);
  for (int i = 1; i <= m; ++i) {
    LaurentPoly::Exponents e(m, 0);
    e[i - 1] = -1;
    map.images.push_back(
        LaurentPoly::monomial(m, e, BaseScalar::v_power(-(n - m))));
  }
  for (int i = m + 1; i <= n; ++i)
    map.images.push_back(
        LaurentPoly::constant(m, BaseScalar::v_power(2 * (i - n) + (n - 1))));
  return map;
}

LaurentPoly apply_rallis(const RallisMap& map, const LaurentPoly& f) {
  if (f.num_vars() != map.n)
    throw ArityMismatch("polynomial does not match the map's source arity");
  return f.substitute(map.images);
}

ParameterPoint point_image(const ParameterPoint& a, int n) {
  int m = static_cast<int>(a.entries.size());
  if (m < 1 || m > n) throw BadShape("need 1 <= m <= n");
  for (const auto& x : a.entries)
    if (!x.is_unit()) throw NonInvertibleEntry("parameter entries must be units");
  ParameterPoint out;
  out.entries.reserve(n);
  BaseScalar shift = BaseScalar::v_power(-(n - m));
  for (const auto& x : a.entries) out.entries.push_back(shift * x.inverse());
  for (int i = m + 1; i <= n; ++i)
    out.entries.push_back(BaseScalar::v_power(2 * (i - n) + (n - 1)));
  return out;
}

bool point_multiset_equal(const ParameterPoint& a, const ParameterPoint& b) {
  if (a.entries.size() != b.entries.size()) return false;
  auto sa = a.entries, sb = b.entries;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return sa == sb;
}

namespace {

// Non-increasing exponent vectors of length n with sum |e_i| <= bound,
// graded by that total degree and ordered lexicographically within a grade.
void gen_candidates(int n, int budget, int prev, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  for (int val = std::min(prev, budget); val >= -budget; --val) {
    if (std::abs(val) > budget) continue;
    cur.push_back(val);
    gen_candidates(n, budget - std::abs(val), val, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> candidate_exponents(int n, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  gen_candidates(n, bound, bound, cur, out);
  auto grade = [](const std::vector<int>& e) {
    int d = 0;
    for (int x : e) d += std::abs(x);
    return d;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const std::vector<int>& a, const std::vector<int>& b) {
                     int ga = grade(a), gb = grade(b);
                     if (ga != gb) return ga < gb;
                     return a > b;  // higher entries first within a grade
                   });
  return out;
}

struct SparseSystem {
  // Rows are target monomials, columns candidate orbit sums.
  std::vector<std::map<int, RatFunc>> rows;
  std::vector<RatFunc> rhs;
};

// Row-reduces in candidate order, preferring pivots that are Laurent
// monomials so the solution stays inside Q[v^{+-1}] whenever possible.
// Returns false when the system is inconsistent.
bool solve_sparse(SparseSystem& sys, int ncols, std::vector<RatFunc>& sol) {
  int nrows = static_cast<int>(sys.rows.size());
  std::vector<bool> row_used(nrows, false);
  std::vector<int> pivot_row(ncols, -1);

  for (int col = 0; col < ncols; ++col) {
    int best = -1;
    bool best_monomial = false;
    for (int r = 0; r < nrows; ++r) {
      if (row_used[r]) continue;
      auto it = sys.rows[r].find(col);
      if (it == sys.rows[r].end() || it->second.is_zero()) continue;
      bool monomial = it->second.to_base_scalar().has_value();
      if (best < 0 || (monomial && !best_monomial)) {
        best = r;
        best_monomial = monomial;
        if (best_monomial) break;
      }
    }
    if (best < 0) continue;  // free column
    row_used[best] = true;
    pivot_row[col] = best;

    RatFunc inv = sys.rows[best][col].inverse();
    for (auto& [c, v] : sys.rows[best]) v *= inv;
    sys.rhs[best] *= inv;

    for (int r = 0; r < nrows; ++r) {
      if (r == best) continue;
      auto it = sys.rows[r].find(col);
      if (it == sys.rows[r].end() || it->second.is_zero()) continue;
      RatFunc f = it->second;
      for (const auto& [c, v] : sys.rows[best]) {
        RatFunc upd = sys.rows[r].count(c) ? sys.rows[r][c] : RatFunc();
        upd -= f * v;
        if (upd.is_zero())
          sys.rows[r].erase(c);
        else
          sys.rows[r][c] = upd;
      }
      sys.rhs[r] -= f * sys.rhs[best];
    }
  }

  for (int r = 0; r < nrows; ++r)
    if (!row_used[r] && !sys.rhs[r].is_zero() && sys.rows[r].empty())
      return false;
  // A leftover row with entries but no pivot cannot happen: every column of
  // every unused row was offered as a pivot.
  for (int r = 0; r < nrows; ++r)
    if (!row_used[r] && !sys.rhs[r].is_zero()) return false;

  sol.assign(ncols, RatFunc());
  for (int col = 0; col < ncols; ++col)
    if (pivot_row[col] >= 0) sol[col] = sys.rhs[pivot_row[col]];
  return true;
}

}  // namespace

LaurentPoly invariant_preimage(const RallisMap& map, const LaurentPoly& g,
                               int bound) {
  if (g.num_vars() != map.m)
    throw ArityMismatch("target polynomial must live in m variables");
  if (!g.is_symmetric())
    throw NotInvariant("target polynomial is not S_m-invariant");

  if (bound <= 0) bound = g.laurent_degree() + (map.n - map.m) + 2;

  for (int attempt = 0; attempt <= 4; ++attempt, bound *= 2) {
    auto candidates = candidate_exponents(map.n, bound);
    int ncols = static_cast<int>(candidates.size());

    std::vector<LaurentPoly> basis;
    basis.reserve(ncols);
    std::map<LaurentPoly::Exponents, int> row_of;
    SparseSystem sys;

    auto row_index = [&](const LaurentPoly::Exponents& e) {
      auto it = row_of.find(e);
      if (it != row_of.end()) return it->second;
      int idx = static_cast<int>(sys.rows.size());
      row_of[e] = idx;
      sys.rows.emplace_back();
      sys.rhs.emplace_back();
      return idx;
    };

    for (int col = 0; col < ncols; ++col) {
      basis.push_back(orbit_sum(map.n, candidates[col]));
      LaurentPoly img = apply_rallis(map, basis.back());
      for (const auto& [e, c] : img.terms()) {
        int r = row_index(e);
        RatFunc cur = sys.rows[r].count(col) ? sys.rows[r][col] : RatFunc();
        sys.rows[r][col] = cur + RatFunc::from_base_scalar(c);
      }
    }
    for (const auto& [e, c] : g.terms())
      sys.rhs[row_index(e)] = RatFunc::from_base_scalar(c);

    std::vector<RatFunc> sol;
    if (!solve_sparse(sys, ncols, sol)) continue;

    LaurentPoly f(map.n);
    bool laurent = true;
    for (int col = 0; col < ncols && laurent; ++col) {
      if (sol[col].is_zero()) continue;
      auto c = sol[col].to_base_scalar();
      if (!c) {
        laurent = false;
        break;
      }
      f += basis[col] * *c;
    }
    if (!laurent) continue;
    if (apply_rallis(map, f) == g) return f;
  }
  throw NotFoundWithinBound("no preimage found within the degree bound");
}

}  // namespace theta
