#include "theta/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "theta/json_io.hpp"
#include "theta/rallis.hpp"
#include "theta/rng.hpp"
#include "theta/strata.hpp"
#include "theta/supports.hpp"
#include "theta/tame.hpp"

namespace theta {

namespace {

using Clock = std::chrono::steady_clock;

class Check {
public:
  explicit Check(std::string name) : start_(Clock::now()) {
    res_.name = std::move(name);
  }

  void expect(bool ok, const std::string& what) {
    ++res_.cases;
    if (!ok) {
      ++res_.failures;
      if (res_.notes.size() < 5) res_.notes.push_back(what);
    }
  }

  SuiteResult done() {
    res_.millis = std::chrono::duration<double, std::milli>(Clock::now() -
                                                            start_)
                      .count();
    return res_;
  }

private:
  SuiteResult res_;
  Clock::time_point start_;
};

Rational rand_rational(Rng& rng, bool nonzero = false) {
  long num = rng.range(-9, 9);
  while (nonzero && num == 0) num = rng.range(-9, 9);
  return make_rational(num, rng.range(1, 9));
}

BaseScalar rand_scalar(Rng& rng) {
  BaseScalar out;
  long terms = rng.range(0, 3);
  for (long i = 0; i < terms; ++i)
    out += BaseScalar::term(rand_rational(rng),
                            static_cast<int>(rng.range(-4, 4)));
  return out;
}

BaseScalar rand_unit(Rng& rng) {
  return BaseScalar::term(rand_rational(rng, true),
                          static_cast<int>(rng.range(-4, 4)));
}

LaurentPoly rand_poly(Rng& rng, int nvars, int max_terms = 4,
                      int max_exp = 3) {
  LaurentPoly out(nvars);
  long terms = rng.range(1, max_terms);
  for (long t = 0; t < terms; ++t) {
    LaurentPoly::Exponents e(nvars);
    for (int i = 0; i < nvars; ++i)
      e[i] = static_cast<int>(rng.range(-max_exp, max_exp));
    out.add_term(e, BaseScalar::term(rand_rational(rng, true),
                                     static_cast<int>(rng.range(-2, 2))));
  }
  return out;
}

ParameterPoint rand_point(Rng& rng, int m) {
  ParameterPoint a;
  for (int i = 0; i < m; ++i) a.entries.push_back(rand_unit(rng));
  return a;
}

// The enumerated unramified family: trivial-character chains twisted by
// v^j for |j| <= twist_range.
std::vector<Support> support_family(int m, int twist_range) {
  std::vector<Support> out;
  for (int j = -twist_range; j <= twist_range; ++j)
    out.push_back(twist_support(trivial_rep_support(m), BaseScalar::v_power(j)));
  return out;
}

Matrix<PFElem> rand_matrix(Rng& rng, int dim, const FqField& fld) {
  Matrix<PFElem> m(dim, dim, PFElem::zero(fld));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m.at(i, j) = PFElem(fld, rng.range(0, fld.ell - 1));
  return m;
}

Matrix<PFElem> rand_invertible(Rng& rng, int dim, const FqField& fld) {
  for (;;) {
    Matrix<PFElem> m = rand_matrix(rng, dim, fld);
    if (m.is_invertible()) return m;
  }
}

// Random pair satisfying the tame relation: sigma assembled from q-power
// eigenvalue cycles, frob the matching scaled cyclic shifts, conjugated by
// a random invertible matrix.
TameParam<PFElem> rand_tame(Rng& rng, int dim, const RingContext& ctx,
                            const FqField& fld) {
  Matrix<PFElem> sigma(dim, dim, PFElem::zero(fld));
  Matrix<PFElem> frob(dim, dim, PFElem::zero(fld));
  int at = 0;
  while (at < dim) {
    PFElem lambda(fld, rng.range(1, fld.ell - 1));
    std::vector<PFElem> orbit{lambda};
    PFElem cur = lambda.pow(ctx.q);
    while (!(cur == lambda)) {
      orbit.push_back(cur);
      cur = cur.pow(ctx.q);
    }
    if (static_cast<int>(orbit.size()) > dim - at) continue;
    int d = static_cast<int>(orbit.size());
    for (int i = 0; i < d; ++i) {
      sigma.at(at + i, at + i) = orbit[i];
      PFElem c(fld, rng.range(1, fld.ell - 1));
      // frob maps e_{i+1} to a multiple of e_i within the cycle.
      frob.at(at + i, at + (i + 1) % d) = c;
    }
    at += d;
  }
  Matrix<PFElem> g = rand_invertible(rng, dim, fld);
  Matrix<PFElem> gi = g.inverse();
  return make_tame_param(g * frob * gi, g * sigma * gi, ctx);
}

std::vector<Word> words_up_to(int maxlen) {
  std::vector<Word> out;
  for (int len = 1; len <= maxlen; ++len)
    for (long mask = 0; mask < (1L << len); ++mask) {
      std::vector<Letter> ls(len);
      for (int i = 0; i < len; ++i)
        ls[i] = (mask >> i) & 1 ? Letter::gen : Letter::frob;
      out.push_back(Word(std::move(ls)));
    }
  return out;
}

Word rand_word(Rng& rng, int maxlen) {
  int len = static_cast<int>(rng.range(1, maxlen));
  std::vector<Letter> ls(len);
  for (int i = 0; i < len; ++i)
    ls[i] = rng.coin() ? Letter::gen : Letter::frob;
  return Word(std::move(ls));
}

// Source-side twisted transpose that the transfer restricts to on the top
// block: (v^{-(n-m)} F^{-T}, sigma^{-T}).
TameParam<PFElem> twisted_transpose(const TameParam<PFElem>& P, int n,
                                    const PFElem& sqrt_q) {
  int m = P.dim();
  PFElem shift = sqrt_q.pow(-(n - m));
  Matrix<PFElem> ft = P.frob.transpose().inverse();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ft.at(i, j) = ft.at(i, j) * shift;
  return make_tame_param(ft, P.gen.transpose().inverse(), P.ctx);
}

std::string describe(const char* tag, long a, long b = -1, long c = -1) {
  std::ostringstream out;
  out << tag << " (" << a;
  if (b >= 0) out << "," << b;
  if (c >= 0) out << "," << c;
  out << ")";
  return out.str();
}

const std::vector<std::pair<long, long>> kTameFields = {
    {3, 13}, {2, 7}, {5, 11}};  // (q, ell)

}  // namespace

SuiteResult suite_canonical_form(const VerifyOptions& opts) {
  Check chk("canonical-form");
  Rng rng(opts.seed ^ 0x11);
  long cases = opts.full ? 200 : 60;
  for (long i = 0; i < cases; ++i) {
    BaseScalar a = rand_scalar(rng), b = rand_scalar(rng);
    chk.expect(((a - b).is_zero()) == (a == b), "scalar difference vs equality");
    LaurentPoly f = rand_poly(rng, 3), g = rand_poly(rng, 3);
    chk.expect((f - f).is_zero(), "f - f must be zero");
    chk.expect(f + g - g == f, "add/sub cancellation");
  }
  return chk.done();
}

SuiteResult suite_specialize_homomorphism(const VerifyOptions& opts) {
  Check chk("specialize-homomorphism");
  Rng rng(opts.seed ^ 0x12);
  std::vector<long> qs = opts.full ? std::vector<long>{2, 3, 5}
                                   : std::vector<long>{3};
  long cases = opts.full ? 200 : 60;
  for (long q : qs) {
    RingContext ctx(q, 1);
    for (long ell : {11L, 13L, 17L, 19L, 23L}) {
      if (ell == ctx.p) continue;
      auto spec = sqrt_q_specialization(ctx, ell);
      if (!spec) continue;
      PFElem v2 = spec->v_image * spec->v_image;
      chk.expect(v2 == PFElem(spec->target, q % ell), "v image squares to q");
      for (long i = 0; i < cases / 5; ++i) {
        BaseScalar x = rand_scalar(rng), y = rand_scalar(rng);
        chk.expect(specialize(x + y, *spec) ==
                       specialize(x, *spec) + specialize(y, *spec),
                   describe("additivity", q, ell));
        chk.expect(specialize(x * y, *spec) ==
                       specialize(x, *spec) * specialize(y, *spec),
                   describe("multiplicativity", q, ell));
      }
    }
  }
  return chk.done();
}

SuiteResult suite_charpoly_conjugation(const VerifyOptions& opts) {
  Check chk("charpoly-conjugation");
  Rng rng(opts.seed ^ 0x13);
  FqField fld = FqField::prime(13);
  long cases = opts.full ? 100 : 30;
  for (long i = 0; i < cases; ++i) {
    int dim = static_cast<int>(rng.range(2, 4));
    Matrix<PFElem> m = rand_matrix(rng, dim, fld);
    Matrix<PFElem> g = rand_invertible(rng, dim, fld);
    chk.expect(charpoly(g * m * g.inverse()) == charpoly(m),
               "conjugation invariance over F_13");
  }
  return chk.done();
}

SuiteResult suite_divide_roundtrip(const VerifyOptions& opts) {
  Check chk("divide-roundtrip");
  Rng rng(opts.seed ^ 0x14);
  long cases = opts.full ? 200 : 60;
  for (long i = 0; i < cases; ++i) {
    int degc = static_cast<int>(rng.range(1, 3));
    std::vector<Rational> cc;
    for (int d = 0; d < degc; ++d) cc.push_back(rand_rational(rng));
    cc.push_back(Rational(1));  // monic
    Poly<Rational> C(cc);
    int degp = static_cast<int>(rng.range(0, 3));
    std::vector<Rational> pc;
    for (int d = 0; d <= degp; ++d) pc.push_back(rand_rational(rng));
    Poly<Rational> P(pc);
    if (P.is_zero()) P = Poly<Rational>::constant(Rational(1));
    chk.expect(divide_exact(P * C, C) == P, "division round trip");

    // A nonzero remainder must be detected.
    Poly<Rational> bad = P * C + Poly<Rational>::constant(Rational(1));
    bool threw = false;
    try {
      divide_exact(bad, C);
    } catch (const NonzeroRemainder&) {
      threw = true;
    }
    chk.expect(threw, "remainder detection");
  }
  return chk.done();
}

SuiteResult suite_symmetrize_fixedness(const VerifyOptions& opts) {
  Check chk("symmetrize-fixedness");
  Rng rng(opts.seed ^ 0x15);
  long cases = opts.full ? 120 : 40;
  for (long i = 0; i < cases; ++i) {
    int n = static_cast<int>(rng.range(2, 4));
    LaurentPoly f = rand_poly(rng, n);
    LaurentPoly s = symmetrize(f);
    chk.expect(s.is_symmetric(), "symmetrized output is invariant");
    LaurentPoly::Exponents e(n);
    for (int j = 0; j < n; ++j) e[j] = static_cast<int>(rng.range(-3, 3));
    chk.expect(orbit_sum(n, e).is_symmetric(), "orbit sums are invariant");
  }
  return chk.done();
}

SuiteResult suite_rallis_formula(const VerifyOptions& opts) {
  (void)opts;
  Check chk("rallis-formula");

  RallisMap m21 = build_rallis(2, 1);
  LaurentPoly x1inv = LaurentPoly::monomial(1, {-1}, BaseScalar::v_power(-1));
  chk.expect(m21.images[0] == x1inv, "(2,1) image of X_1");
  chk.expect(m21.images[1] == LaurentPoly::constant(1, BaseScalar::v_power(1)),
             "(2,1) image of X_2");
  chk.expect(m21.images[0].to_string() == "(v^-1)*X1^-1",
             "(2,1) canonical form of X_1 image");
  chk.expect(m21.images[1].to_string() == "(v)", "(2,1) canonical form of X_2 image");

  RallisMap m31 = build_rallis(3, 1);
  chk.expect(m31.images[0] ==
                 LaurentPoly::monomial(1, {-1}, BaseScalar::v_power(-2)),
             "(3,1) image of X_1");
  chk.expect(m31.images[1] == LaurentPoly::constant(1, BaseScalar::one()),
             "(3,1) image of X_2");
  chk.expect(m31.images[2] == LaurentPoly::constant(1, BaseScalar::v_power(2)),
             "(3,1) image of X_3");
  chk.expect(m31.images[0].to_string() == "(v^-2)*X1^-1",
             "(3,1) canonical form of X_1 image");

  for (int k = 1; k <= 4; ++k) {
    RallisMap mkk = build_rallis(k, k);
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      LaurentPoly::Exponents e(k, 0);
      e[i] = -1;
      ok = ok && mkk.images[i] == LaurentPoly::monomial(k, e, BaseScalar::one());
    }
    chk.expect(ok, describe("(k,k) duality images", k));
  }
  return chk.done();
}

SuiteResult suite_rallis_adjointness(const VerifyOptions& opts) {
  Check chk("rallis-adjointness");
  Rng rng(opts.seed ^ 0x21);
  long cases = opts.full ? 200 : 60;
  for (long i = 0; i < cases; ++i) {
    int n = static_cast<int>(rng.range(1, 4));
    int m = static_cast<int>(rng.range(1, n));
    RallisMap map = build_rallis(n, m);
    LaurentPoly f = rand_poly(rng, n);
    ParameterPoint a = rand_point(rng, m);
    BaseScalar lhs = f.evaluate(point_image(a, n).entries);
    BaseScalar rhs = apply_rallis(map, f).evaluate(a.entries);
    chk.expect(lhs == rhs, describe("adjointness", n, m));
  }
  return chk.done();
}

SuiteResult suite_rallis_equivariance(const VerifyOptions& opts) {
  Check chk("rallis-equivariance");
  Rng rng(opts.seed ^ 0x22);
  long cases = opts.full ? 100 : 30;
  for (long i = 0; i < cases; ++i) {
    int n = static_cast<int>(rng.range(2, 4));
    int m = static_cast<int>(rng.range(1, n));
    RallisMap map = build_rallis(n, m);
    LaurentPoly f = rand_poly(rng, n);
    // Transpositions inside {1..m} act on both sides of the transfer.
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        LaurentPoly lhs = apply_rallis(map, f.swapped(a, b));
        LaurentPoly rhs = apply_rallis(map, f).swapped(a, b);
        chk.expect(lhs == rhs, describe("equivariance", n, m, a));
      }
    // Invariant input yields invariant output.
    LaurentPoly s = symmetrize(f);
    chk.expect(apply_rallis(map, s).is_symmetric(),
               describe("invariant image", n, m));
  }
  return chk.done();
}

SuiteResult suite_duality_involution(const VerifyOptions& opts) {
  Check chk("duality-involution");
  Rng rng(opts.seed ^ 0x23);
  long cases = opts.full ? 100 : 30;
  for (long i = 0; i < cases; ++i) {
    int n = static_cast<int>(rng.range(1, 4));
    RallisMap map = build_rallis(n, n);
    LaurentPoly f = rand_poly(rng, n);
    chk.expect(apply_rallis(map, apply_rallis(map, f)) == f,
               describe("polynomial involution", n));
  }
  for (int m = 1; m <= 4; ++m)
    for (const Support& s : support_family(m, 6))
      chk.expect(support_equal(theta_support(theta_support(s, m), m), s),
                 describe("support involution", m));
  return chk.done();
}

SuiteResult suite_point_composition(const VerifyOptions& opts) {
  Check chk("point-composition");
  Rng rng(opts.seed ^ 0x24);
  int top = opts.full ? 5 : 3;
  long reps = opts.full ? 5 : 2;
  for (int m = 1; m <= top; ++m)
    for (int k = m; k <= top; ++k)
      for (int n = k; n <= top; ++n)
        for (long r = 0; r < reps; ++r) {
          ParameterPoint a = rand_point(rng, m);
          ParameterPoint staged =
              point_image(point_image(point_image(a, k), k), n);
          chk.expect(point_multiset_equal(staged, point_image(a, n)),
                     describe("composition", m, k, n));
        }
  return chk.done();
}

SuiteResult suite_surjectivity_witness(const VerifyOptions& opts) {
  Check chk("surjectivity-witness");
  int top = opts.full ? 4 : 3;
  for (int n = 2; n <= top; ++n)
    for (int m = 1; m < n; ++m) {
      RallisMap map = build_rallis(n, m);
      std::vector<LaurentPoly> targets;
      for (int k = 1; k <= m; ++k) targets.push_back(elementary_symmetric(m, k));
      targets.push_back(
          LaurentPoly::monomial(m, LaurentPoly::Exponents(m, -1),
                                BaseScalar::one()));  // e_m^{-1}
      for (const LaurentPoly& g : targets) {
        try {
          LaurentPoly f = invariant_preimage(map, g);
          chk.expect(f.is_symmetric(), describe("preimage invariance", n, m));
          chk.expect(apply_rallis(map, f) == g,
                     describe("preimage round trip", n, m));
        } catch (const Error& e) {
          chk.expect(false, describe("preimage search failed", n, m) + ": " +
                                e.what());
        }
      }
    }
  return chk.done();
}

SuiteResult suite_preimage_roundtrip(const VerifyOptions& opts) {
  Check chk("preimage-roundtrip");
  Rng rng(opts.seed ^ 0x25);
  long cases = opts.full ? 30 : 10;
  long solved = 0;
  for (long i = 0; i < cases; ++i) {
    int n = static_cast<int>(rng.range(2, 3));
    int m = static_cast<int>(rng.range(1, n - 1));
    RallisMap map = build_rallis(n, m);
    LaurentPoly g = symmetrize(rand_poly(rng, m, 2, 2));
    try {
      LaurentPoly f = invariant_preimage(map, g);
      ++solved;
      chk.expect(apply_rallis(map, f) == g, describe("round trip", n, m));
    } catch (const NotFoundWithinBound&) {
      // Allowed: the contract only constrains successful solves.
      chk.expect(true, "");
    }
  }
  SuiteResult res = chk.done();
  res.notes.push_back("solved " + std::to_string(solved) + "/" +
                      std::to_string(cases));
  return res;
}

SuiteResult suite_support_inductive(const VerifyOptions& opts) {
  Check chk("support-inductive");
  int top = opts.full ? 5 : 3;
  int twists = opts.full ? 6 : 3;
  for (int m = 1; m <= top; ++m)
    for (const Support& s : support_family(m, twists))
      for (int k = m; k <= top; ++k)
        for (int n = k; n <= top; ++n)
          chk.expect(theta_inductive_check(m, k, n, s),
                     describe("inductive relation", m, k, n));
  return chk.done();
}

SuiteResult suite_support_injectivity(const VerifyOptions& opts) {
  Check chk("support-injectivity");
  int top = opts.full ? 6 : 4;
  for (int m = 1; m <= std::min(4, top); ++m) {
    auto family = support_family(m, 6);
    for (int n = m; n <= top; ++n) {
      std::vector<Support> images;
      images.reserve(family.size());
      for (const Support& s : family) images.push_back(theta_support(s, n));
      bool injective = true;
      for (size_t i = 0; i < images.size() && injective; ++i)
        for (size_t j = i + 1; j < images.size(); ++j)
          if (support_equal(images[i], images[j])) {
            injective = false;
            break;
          }
      chk.expect(injective, describe("injectivity", m, n));
    }
  }
  return chk.done();
}

SuiteResult suite_support_rallis_consistency(const VerifyOptions& opts) {
  Check chk("support-rallis-consistency");
  int top = opts.full ? 5 : 3;
  for (int m = 1; m <= std::min(4, top); ++m)
    for (const Support& s : support_family(m, 4))
      for (int n = m; n <= top; ++n) {
        ParameterPoint twists;
        for (const auto& e : s.elements()) twists.entries.push_back(e.twist);
        ParameterPoint expected = point_image(twists, n);
        ParameterPoint got;
        for (const auto& e : theta_support(s, n).elements())
          got.entries.push_back(e.twist);
        chk.expect(point_multiset_equal(got, expected),
                   describe("twist multisets", m, n));
      }
  return chk.done();
}

SuiteResult suite_mod_ell_collapse(const VerifyOptions& opts) {
  Check chk("mod-ell-collapse");

  // Spotlight case q = 3, n = 3: congruent mod 13, not mod 5.
  RingContext q3(3, 1);
  Support triv3 = trivial_rep_support(3);
  Support twisted3 = twist_support(triv3, BaseScalar::v_power(2));
  auto s13 = sqrt_q_specialization(q3, 13);
  auto s5 = sqrt_q_specialization(q3, 5);
  chk.expect(s13 && support_equal(triv3, twisted3, *s13),
             "collapse at (n,q,ell) = (3,3,13)");
  chk.expect(s5 && !support_equal(triv3, twisted3, *s5),
             "no collapse at (n,q,ell) = (3,3,5)");

  int top_n = opts.full ? 4 : 3;
  long top_ell = opts.full ? 50 : 23;
  std::vector<long> qs = opts.full ? std::vector<long>{2, 3, 5}
                                   : std::vector<long>{2, 3};
  for (long q : qs) {
    RingContext ctx(q, 1);
    for (int n = 1; n <= top_n; ++n) {
      Support triv = trivial_rep_support(n);
      Support twisted = twist_support(triv, BaseScalar::v_power(2));
      Integer qn = 1;
      for (int i = 0; i < n; ++i) qn *= q;
      for (long ell = 2; ell <= top_ell; ++ell) {
        if (!is_prime(ell) || ell == q) continue;
        auto spec = sqrt_q_specialization(ctx, ell);
        if (!spec) continue;
        bool equal = support_equal(triv, twisted, *spec);
        bool divides = (qn - 1) % ell == 0;
        chk.expect(equal == divides, describe("divisibility match", q, n, ell));
      }
    }
  }
  return chk.done();
}

SuiteResult suite_tame_relation(const VerifyOptions& opts) {
  Check chk("tame-relation");
  Rng rng(opts.seed ^ 0x31);
  long cases = opts.full ? 200 : 60;
  for (const auto& [q, ell] : kTameFields) {
    RingContext ctx(q, 1);
    auto spec = sqrt_q_specialization(ctx, ell);
    if (!spec || spec->target.ext) {
      chk.expect(false, describe("sqrt(q) missing mod ell", q, ell));
      continue;
    }
    PFElem sq = spec->v_image;
    for (long i = 0; i < cases; ++i) {
      int m = static_cast<int>(rng.range(1, 4));
      TameParam<PFElem> P = rand_tame(rng, m, ctx, spec->target);
      chk.expect(check_tame(P), describe("generated pair is tame", q, ell));
      int n = static_cast<int>(rng.range(m, m + 2));
      chk.expect(check_tame(l_theta(P, n, sq)),
                 describe("transfer preserves the relation", q, ell, n));
    }
  }
  return chk.done();
}

SuiteResult suite_word_conjugation(const VerifyOptions& opts) {
  Check chk("word-conjugation");
  Rng rng(opts.seed ^ 0x32);
  RingContext ctx(3, 1);
  auto spec = sqrt_q_specialization(ctx, 13);
  FqField fld = spec->target;
  long cases = opts.full ? 100 : 30;
  for (long i = 0; i < cases; ++i) {
    int m = static_cast<int>(rng.range(1, 3));
    TameParam<PFElem> P = rand_tame(rng, m, ctx, fld);
    Matrix<PFElem> g = rand_invertible(rng, m, fld);
    Matrix<PFElem> gi = g.inverse();
    TameParam<PFElem> Pc =
        make_tame_param(g * P.frob * gi, g * P.gen * gi, ctx);
    Word w = rand_word(rng, opts.full ? 6 : 4);
    chk.expect(word_invariants(P, w).coeffs == word_invariants(Pc, w).coeffs,
               "conjugation-invariant word coordinates");
    int n = m + static_cast<int>(rng.range(0, 2));
    chk.expect(word_invariants(l_theta(P, n, spec->v_image), w).coeffs ==
                   word_invariants(l_theta(Pc, n, spec->v_image), w).coeffs,
               "transfer respects conjugation at the invariant level");
  }
  return chk.done();
}

SuiteResult suite_factorization_pullback(const VerifyOptions& opts) {
  Check chk("factorization-pullback");
  Rng rng(opts.seed ^ 0x33);
  int top = opts.full ? 5 : 3;
  int maxword = opts.full ? 6 : 4;
  auto words = words_up_to(maxword);
  for (const auto& [q, ell] : kTameFields) {
    RingContext ctx(q, 1);
    auto spec = sqrt_q_specialization(ctx, ell);
    PFElem sq = spec->v_image;
    for (int n = 2; n <= top; ++n)
      for (int m = 1; m < n; ++m) {
        TameParam<PFElem> P = rand_tame(rng, m, ctx, spec->target);
        TameParam<PFElem> image = l_theta(P, n, sq);
        TameParam<PFElem> twisted = twisted_transpose(P, n, sq);
        std::vector<PFElem> blocks = l_theta_scalar_blocks(m, n, sq);
        for (const Word& w : words) {
          Poly<PFElem> pushed = word_invariants(image, w).coeffs;
          Poly<PFElem> source = word_invariants(twisted, w).coeffs;
          Poly<PFElem> tail = Poly<PFElem>::constant(PFElem::one(spec->target));
          for (const PFElem& d : blocks)
            tail = tail * Poly<PFElem>::monic_linear(d.pow(w.frob_count()));
          chk.expect(pushed == source * tail,
                     describe("factorization", q, n, m));
          chk.expect(pullback_coefficients(pushed, w.frob_count(), blocks) ==
                         source,
                     describe("pullback recovers the source", q, n, m));
        }
        // Perturbing one coefficient must break divisibility.
        Word w = words[rng.next() % words.size()];
        Poly<PFElem> pushed = word_invariants(image, w).coeffs;
        std::vector<PFElem> bumped = pushed.coeffs();
        int at = static_cast<int>(rng.range(0, n - 1));
        bumped[at] = bumped[at] + PFElem::one(spec->target);
        bool threw = false;
        try {
          pullback_coefficients(Poly<PFElem>(bumped), w.frob_count(), blocks);
        } catch (const NonzeroRemainder&) {
          threw = true;
        }
        chk.expect(threw, describe("perturbation detected", q, n, m));
      }
  }
  return chk.done();
}

SuiteResult suite_satake_crosscheck(const VerifyOptions& opts) {
  Check chk("satake-crosscheck");
  Rng rng(opts.seed ^ 0x34);
  RingContext ctx(3, 1);
  long cases = opts.full ? 100 : 30;
  int top = opts.full ? 5 : 3;
  for (long i = 0; i < cases; ++i) {
    int n = static_cast<int>(rng.range(2, top));
    int m = static_cast<int>(rng.range(1, n - 1 >= 1 ? n - 1 : 1));
    std::vector<BaseScalar> diag;
    for (int j = 0; j < m; ++j) diag.push_back(rand_unit(rng));
    chk.expect(satake_crosscheck(diag, n, ctx),
               describe("diagonal transfer agreement", n, m));
  }
  // Duality case m = n.
  for (int n = 1; n <= 4; ++n) {
    std::vector<BaseScalar> diag;
    for (int j = 0; j < n; ++j) diag.push_back(rand_unit(rng));
    chk.expect(satake_crosscheck(diag, n, ctx), describe("duality case", n));
  }
  return chk.done();
}

SuiteResult suite_strata_census(const VerifyOptions& opts) {
  Check chk("strata-census");

  StrataReport r212 = enumerate_strata(2, 1, 2);
  chk.expect(r212.counts == std::vector<Integer>{1, 3}, "(2,1,2) counts");
  StrataReport r222 = enumerate_strata(2, 2, 2);
  chk.expect(r222.counts == std::vector<Integer>{1, 9, 6}, "(2,2,2) counts");
  chk.expect(r222.counts[2] == gl_order(2, 2), "top stratum is the group");

  int top = opts.full ? 3 : 2;
  std::vector<long> qs = opts.full ? std::vector<long>{2, 3, 4, 5}
                                   : std::vector<long>{2, 3};
  for (long q : qs)
    for (int n = 1; n <= top; ++n)
      for (int m = 1; m <= top; ++m) {
        StrataReport rep = enumerate_strata(n, m, q);
        Integer total = 0;
        for (const Integer& c : rep.counts) total += c;
        Integer space = 1;
        for (int i = 0; i < n * m; ++i) space *= q;
        chk.expect(total == space, describe("partition", n, m, q));
        chk.expect(rep.cumulative[0] == space, "U_0 is everything");
        Integer group = rep.gl_n * rep.gl_m;
        for (size_t k = 0; k < rep.counts.size(); ++k)
          chk.expect(rep.counts[k] * rep.stabilizer_orders[k] == group,
                     describe("orbit-stabilizer", n, m, q));
        chk.expect(rep.counts[0] == 1, "only zero has rank 0");
        for (size_t k = 0; k + 1 < rep.cumulative.size(); ++k) {
          chk.expect(rep.cumulative[k + 1] < rep.cumulative[k],
                     describe("strict nesting", n, m, q));
          chk.expect(rep.cumulative[k] ==
                         rep.cumulative[k + 1] + rep.counts[k],
                     describe("filtration dimension count", n, m, q));
        }
        StrataReport flipped = enumerate_strata(m, n, q);
        chk.expect(flipped.counts == rep.counts,
                   describe("transpose symmetry", n, m, q));
      }
  return chk.done();
}

SuiteResult suite_strata_transitivity(const VerifyOptions& opts) {
  Check chk("strata-transitivity");
  std::vector<long> qs = opts.full ? std::vector<long>{2, 3, 4, 5}
                                   : std::vector<long>{2, 3};
  for (long q : qs)
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 2; ++m)
        for (int k = 0; k <= std::min(n, m); ++k)
          chk.expect(orbit_transitivity_check(n, m, k, q),
                     describe("single orbit", n, m, k));
  return chk.done();
}

SuiteResult suite_serialization_roundtrip(const VerifyOptions& opts) {
  Check chk("serialization-roundtrip");
  Rng rng(opts.seed ^ 0x41);
  long cases = opts.full ? 120 : 40;
  for (long i = 0; i < cases; ++i) {
    BaseScalar x = rand_scalar(rng);
    chk.expect(scalar_from_json(scalar_to_json(x)) == x, "scalar round trip");

    int n = static_cast<int>(rng.range(1, 4));
    LaurentPoly f = rand_poly(rng, n);
    chk.expect(poly_from_json(poly_to_json(f)) == f, "polynomial round trip");
    chk.expect(poly_to_json(f).dump() == poly_to_json(f).dump(),
               "deterministic bytes");

    Support s = twist_support(trivial_rep_support(
                                  static_cast<int>(rng.range(1, 4))),
                              rand_unit(rng));
    chk.expect(support_equal(support_from_json(support_to_json(s)), s),
               "support round trip");

    Word w = rand_word(rng, 6);
    Json wj = word_to_json(w);
    chk.expect(word_from_json(wj).letters == w.letters, "word round trip");
  }
  return chk.done();
}

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts) {
  std::vector<SuiteResult> out;
  out.push_back(suite_canonical_form(opts));
  out.push_back(suite_specialize_homomorphism(opts));
  out.push_back(suite_charpoly_conjugation(opts));
  out.push_back(suite_divide_roundtrip(opts));
  out.push_back(suite_symmetrize_fixedness(opts));
  out.push_back(suite_rallis_formula(opts));
  out.push_back(suite_rallis_adjointness(opts));
  out.push_back(suite_rallis_equivariance(opts));
  out.push_back(suite_duality_involution(opts));
  out.push_back(suite_point_composition(opts));
  out.push_back(suite_surjectivity_witness(opts));
  out.push_back(suite_preimage_roundtrip(opts));
  out.push_back(suite_support_inductive(opts));
  out.push_back(suite_support_injectivity(opts));
  out.push_back(suite_support_rallis_consistency(opts));
  out.push_back(suite_mod_ell_collapse(opts));
  out.push_back(suite_tame_relation(opts));
  out.push_back(suite_word_conjugation(opts));
  out.push_back(suite_factorization_pullback(opts));
  out.push_back(suite_satake_crosscheck(opts));
  out.push_back(suite_strata_census(opts));
  out.push_back(suite_strata_transitivity(opts));
  out.push_back(suite_serialization_roundtrip(opts));
  return out;
}

}  // namespace theta
