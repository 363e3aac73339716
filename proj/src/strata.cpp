#include "theta/strata.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace theta {

namespace {

constexpr long kSpaceGuard = 1L << 24;

// Monic irreducible polynomials over F_p used to build F_{p^f}; the entry
// for (p, f) lists the coefficients of x^0..x^{f-1} (the x^f coefficient is
// one). Fixed table, f in {2, 3}.
const std::map<std::pair<long, long>, std::vector<long>>& poly_table() {
  static const std::map<std::pair<long, long>, std::vector<long>> table = {
      {{2, 2}, {1, 1}},     // x^2 + x + 1
      {{2, 3}, {1, 1, 0}},  // x^3 + x + 1
      {{3, 2}, {2, 2}},     // x^2 + 2x + 2
      {{3, 3}, {1, 2, 0}},  // x^3 + 2x + 1
      {{5, 2}, {2, 4}},     // x^2 + 4x + 2
      {{5, 3}, {3, 3, 0}},  // x^3 + 3x + 3
      {{7, 2}, {3, 6}},     // x^2 + 6x + 3
      {{7, 3}, {4, 6, 0}},  // x^3 + 6x + 4
  };
  return table;
}

std::pair<long, long> factor_prime_power(long q) {
  if (q < 2) throw BadShape("field size must be at least 2");
  long p = 0;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {q, 1};
  long f = 0, rest = q;
  while (rest > 1) {
    if (rest % p != 0) throw BadShape("field size must be a prime power");
    rest /= p;
    ++f;
  }
  return {p, f};
}

}  // namespace

GFTable::GFTable(long p, long f) : p_(p), f_(f) {
  q_ = 1;
  for (long i = 0; i < f; ++i) q_ *= p;
  if (q_ > 512) throw TooLarge("field size out of table range");

  std::vector<long> defining;  // coefficients of x^0..x^{f-1}
  if (f > 1) {
    auto it = poly_table().find({p, f});
    if (it == poly_table().end())
      throw BadShape("no defining polynomial for this field size");
    defining = it->second;
  }

  auto digits = [&](long x) {
    std::vector<long> d(f);
    for (long i = 0; i < f; ++i) {
      d[i] = x % p;
      x /= p;
    }
    return d;
  };
  auto index = [&](const std::vector<long>& d) {
    long x = 0;
    for (long i = f - 1; i >= 0; --i) x = x * p + d[i];
    return x;
  };

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (long a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::vector<long> dn(f);
    for (long i = 0; i < f; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = static_cast<uint16_t>(index(dn));
    for (long b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<long> ds(f);
      for (long i = 0; i < f; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = static_cast<uint16_t>(index(ds));

      // Polynomial product reduced by the defining polynomial.
      std::vector<long> prod(2 * f - 1, 0);
      for (long i = 0; i < f; ++i)
        for (long j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      for (long d = 2 * f - 2; d >= f; --d) {
        long c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        // x^d = x^{d-f} * (-defining)
        for (long i = 0; i < f; ++i)
          prod[d - f + i] = (prod[d - f + i] + c * (p - defining[i])) % p;
      }
      prod.resize(f);
      mul_[a * q_ + b] = static_cast<uint16_t>(index(prod));
    }
  }
  for (long a = 1; a < q_; ++a)
    for (long b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<uint16_t>(b);
        break;
      }

  gen_ = 0;
  for (long g = 1; g < q_; ++g) {
    long x = g, order = 1;
    while (x != 1) {
      x = mul_[x * q_ + g];
      ++order;
    }
    if (order == q_ - 1) {
      gen_ = static_cast<uint16_t>(g);
      break;
    }
  }
}

uint16_t GFTable::inv(uint16_t a) const {
  if (a == 0) throw NonInvertibleEntry("zero is not invertible");
  return inv_[a];
}

const GFTable& GFTable::get(long q) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<GFTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) {
    auto [p, f] = factor_prime_power(q);
    if (!is_prime(p)) throw BadShape("field size must be a prime power");
    it = cache.emplace(q, std::unique_ptr<GFTable>(new GFTable(p, f))).first;
  }
  return *it->second;
}

Integer gl_order(int r, long q) {
  Integer order = 1;
  Integer qr = 1;
  for (int i = 0; i < r; ++i) qr *= q;
  Integer qi = 1;
  for (int i = 0; i < r; ++i) {
    order *= qr - qi;
    qi *= q;
  }
  return order;
}

Integer stabilizer_order(int n, int m, int k, long q) {
  if (k < 0 || k > std::min(n, m)) throw BadShape("rank out of range");
  Integer order = gl_order(k, q) * gl_order(n - k, q) * gl_order(m - k, q);
  long e = static_cast<long>(k) * (n - k) + static_cast<long>(k) * (m - k);
  for (long i = 0; i < e; ++i) order *= q;
  return order;
}

namespace {

int rank_of(std::vector<uint16_t> a, int n, int m, const GFTable& gf) {
  int rank = 0;
  for (int col = 0; col < m && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (a[r * m + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = col; j < m; ++j)
        std::swap(a[pivot * m + j], a[rank * m + j]);
    uint16_t piv_inv = gf.inv(a[rank * m + col]);
    for (int r = rank + 1; r < n; ++r) {
      uint16_t x = a[r * m + col];
      if (x == 0) continue;
      uint16_t factor = gf.mul(x, piv_inv);
      for (int j = col; j < m; ++j)
        a[r * m + j] = gf.add(a[r * m + j],
                              gf.neg(gf.mul(factor, a[rank * m + j])));
    }
    ++rank;
  }
  return rank;
}

long space_size_guarded(int n, int m, long q) {
  if (n < 1 || m < 1) throw BadShape("dimensions must be positive");
  long size = 1;
  for (int i = 0; i < n * m; ++i) {
    size *= q;
    if (size > kSpaceGuard) throw TooLarge("matrix space exceeds the size guard");
  }
  return size;
}

long encode(const std::vector<uint16_t>& a, long q) {
  long idx = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    idx = idx * q + a[i];
  return idx;
}

}  // namespace

StrataReport enumerate_strata(int n, int m, long q) {
  const GFTable& gf = GFTable::get(q);
  long size = space_size_guarded(n, m, q);
  int kmax = std::min(n, m);

  StrataReport rep;
  rep.n = n;
  rep.m = m;
  rep.q = q;
  rep.counts.assign(kmax + 1, 0);

  std::vector<uint16_t> a(n * m, 0);
  for (long idx = 0;; ++idx) {
    rep.counts[rank_of(a, n, m, gf)] += 1;
    if (idx + 1 >= size) break;
    for (int cell = 0;; ++cell) {
      if (a[cell] + 1 < q) {
        ++a[cell];
        break;
      }
      a[cell] = 0;
    }
  }

  rep.cumulative.assign(kmax + 1, 0);
  Integer acc = 0;
  for (int k = kmax; k >= 0; --k) {
    acc += rep.counts[k];
    rep.cumulative[k] = acc;
  }
  rep.stabilizer_orders.reserve(kmax + 1);
  for (int k = 0; k <= kmax; ++k)
    rep.stabilizer_orders.push_back(stabilizer_order(n, m, k, q));
  rep.gl_n = gl_order(n, q);
  rep.gl_m = gl_order(m, q);
  return rep;
}

namespace {

// Elementary transvections plus one diagonal generator; enough to generate
// the general linear group, and cheap to apply in the closure search.
std::vector<std::vector<uint16_t>> gl_generators(int n, const GFTable& gf) {
  std::vector<std::vector<uint16_t>> gens;
  long q = gf.q();
  std::vector<uint16_t> id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (long c = 1; c < q; ++c) {
        auto g = id;
        g[i * n + j] = static_cast<uint16_t>(c);
        gens.push_back(std::move(g));
      }
    }
  if (gf.multiplicative_generator() > 1) {
    auto g = id;
    g[0] = gf.multiplicative_generator();
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<uint16_t> mul_left(const std::vector<uint16_t>& g,
                               const std::vector<uint16_t>& x, int n, int m,
                               const GFTable& gf) {
  std::vector<uint16_t> r(n * m, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      uint16_t gik = g[i * n + k];
      if (gik == 0) continue;
      for (int j = 0; j < m; ++j)
        r[i * m + j] = gf.add(r[i * m + j], gf.mul(gik, x[k * m + j]));
    }
  return r;
}

std::vector<uint16_t> mul_right(const std::vector<uint16_t>& x,
                                const std::vector<uint16_t>& h, int n, int m,
                                const GFTable& gf) {
  std::vector<uint16_t> r(n * m, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) {
      uint16_t xik = x[i * m + k];
      if (xik == 0) continue;
      for (int j = 0; j < m; ++j)
        r[i * m + j] = gf.add(r[i * m + j], gf.mul(xik, h[k * m + j]));
    }
  return r;
}

}  // namespace

bool orbit_transitivity_check(int n, int m, int k, long q) {
  if (k < 0 || k > std::min(n, m)) throw BadShape("rank out of range");
  const GFTable& gf = GFTable::get(q);
  long size = space_size_guarded(n, m, q);

  std::vector<uint16_t> x0(n * m, 0);
  for (int i = 0; i < k; ++i) x0[i * m + i] = 1;

  auto left_gens = gl_generators(n, gf);
  auto right_gens = gl_generators(m, gf);

  std::vector<bool> seen(size, false);
  std::vector<std::vector<uint16_t>> frontier{x0};
  seen[encode(x0, q)] = true;
  long orbit = 1;
  while (!frontier.empty()) {
    std::vector<std::vector<uint16_t>> next;
    for (const auto& x : frontier) {
      auto visit = [&](std::vector<uint16_t>&& y) {
        long idx = encode(y, q);
        if (!seen[idx]) {
          seen[idx] = true;
          ++orbit;
          next.push_back(std::move(y));
        }
      };
      for (const auto& g : left_gens) visit(mul_left(g, x, n, m, gf));
      for (const auto& h : right_gens) visit(mul_right(x, h, n, m, gf));
    }
    frontier = std::move(next);
  }

  // The closure must exhaust the stratum found by the census.
  return Integer(orbit) == enumerate_strata(n, m, q).counts[k];
}

}  // namespace theta
