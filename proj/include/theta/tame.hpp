#ifndef THETA_TAME_HPP
#define THETA_TAME_HPP

#include <vector>

#include "theta/base_scalar.hpp"
#include "theta/matrix.hpp"
#include "theta/ratfunc.hpp"

namespace theta {

enum class Letter { frob, gen };

// Nonempty word over the two-letter alphabet {frob, gen}.
struct Word {
  std::vector<Letter> letters;

  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {
    if (letters.empty()) throw BadShape("words must be nonempty");
  }

  // Number of frob letters; drives the scalar-block power in pullbacks.
  long frob_count() const {
    long c = 0;
    for (Letter l : letters)
      if (l == Letter::frob) ++c;
    return c;
  }
};

// Pair of invertible matrices (F, sigma) over an exact field. The tame
// relation F sigma F^{-1} = sigma^q is a checkable predicate, not a
// constructor guarantee.
template <class K>
struct TameParam {
  Matrix<K> frob;
  Matrix<K> gen;
  RingContext ctx;

  int dim() const { return frob.rows(); }
};

template <class K>
TameParam<K> make_tame_param(Matrix<K> frob, Matrix<K> gen,
                             const RingContext& ctx) {
  if (!frob.is_square() || !gen.is_square() || frob.rows() != gen.rows())
    throw BadShape("parameter matrices must be square of equal size");
  return TameParam<K>{std::move(frob), std::move(gen), ctx};
}

template <class K>
bool check_tame(const TameParam<K>& P) {
  Matrix<K> lhs = P.frob * P.gen * P.frob.inverse();
  Matrix<K> rhs = P.gen.pow(P.ctx.q);
  (void)P.gen.inverse();  // both matrices must be invertible
  return lhs == rhs;
}

// Transfer of an m-dimensional pair into dimension n:
//   frob' = blockdiag(v^{-(n-m)} * F^{-T},
//                     diag(v^{2(m+1-n)+(n-1)}, ..., v^{n-1}))
//   gen'  = blockdiag(sigma^{-T}, I_{n-m})
// where v = sqrt_q. The scalar tail matches the unramified chain used for
// supports and parameter points.
template <class K>
TameParam<K> l_theta(const TameParam<K>& P, int n, const K& sqrt_q) {
  int m = P.dim();
  if (m > n) throw BadShape("target dimension must be at least the source");
  K one = field_one(sqrt_q);
  K shift = one;
  for (int i = 0; i < n - m; ++i) shift = shift * field_inv(sqrt_q);

  Matrix<K> ft = P.frob.transpose().inverse();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ft.at(i, j) = ft.at(i, j) * shift;

  Matrix<K> frob = ft;
  if (n > m) {
    Matrix<K> tail(n - m, n - m, field_zero(sqrt_q));
    for (int j = 1; j <= n - m; ++j) {
      int e = 2 * (m + j - n) + (n - 1);
      K val = one;
      for (int i = 0; i < std::abs(e); ++i)
        val = e > 0 ? val * sqrt_q : val * field_inv(sqrt_q);
      tail.at(j - 1, j - 1) = val;
    }
    frob = Matrix<K>::block_diag(ft, tail);
  }

  Matrix<K> gt = P.gen.transpose().inverse();
  Matrix<K> gen = n > m ? Matrix<K>::block_diag(
                              gt, Matrix<K>::identity(n - m, sqrt_q))
                        : gt;
  return TameParam<K>{std::move(frob), std::move(gen), P.ctx};
}

// Diagonal scalar tail of the transferred Frobenius, as used by pullbacks.
template <class K>
std::vector<K> l_theta_scalar_blocks(int m, int n, const K& sqrt_q) {
  std::vector<K> out;
  out.reserve(n - m);
  K one = field_one(sqrt_q);
  for (int j = 1; j <= n - m; ++j) {
    int e = 2 * (m + j - n) + (n - 1);
    K val = one;
    for (int i = 0; i < std::abs(e); ++i)
      val = e > 0 ? val * sqrt_q : val * field_inv(sqrt_q);
    out.push_back(val);
  }
  return out;
}

template <class K>
Matrix<K> word_value(const TameParam<K>& P, const Word& w) {
  Matrix<K> acc = Matrix<K>::identity(P.dim(), P.frob.at(0, 0));
  for (Letter l : w.letters) acc = acc * (l == Letter::frob ? P.frob : P.gen);
  return acc;
}

// Characteristic polynomial coefficients of the word value; monic of degree
// equal to the parameter dimension.
template <class K>
struct InvariantVector {
  Word word;
  Poly<K> coeffs;  // det(X*I - value), degree dim, monic
};

template <class K>
InvariantVector<K> word_invariants(const TameParam<K>& P, const Word& w) {
  return InvariantVector<K>{w, charpoly(word_value(P, w))};
}

// Recovers the degree-m source characteristic polynomial from a pushed-down
// one of degree n: divide exactly by prod_j (X - d_j^{alpha1}) over the
// diagonal scalar blocks d_j. A nonzero remainder means the input is not a
// pushforward.
template <class K>
Poly<K> pullback_coefficients(const Poly<K>& pushed, long alpha1,
                              const std::vector<K>& scalar_blocks) {
  if (!pushed.is_monic()) throw BadShape("pushed vector must be monic");
  if (scalar_blocks.empty()) return pushed;
  K one = field_one(scalar_blocks[0]);
  Poly<K> divisor = Poly<K>::constant(one);
  for (const K& d : scalar_blocks) {
    K dp = one;
    for (long i = 0; i < alpha1; ++i) dp = dp * d;
    divisor = divisor * Poly<K>::monic_linear(dp);
  }
  return divide_exact(pushed, divisor);
}

// Compares the diagonal of the transferred Frobenius (sigma = I, diagonal
// source) against the parameter-point image of the same diagonal, as
// multisets over Q[v^{+-1}].
bool satake_crosscheck(const Matrix<RatFunc>& frob, const Matrix<RatFunc>& gen,
                       int n, const RingContext& ctx);
bool satake_crosscheck(const std::vector<BaseScalar>& diag_entries, int n,
                       const RingContext& ctx);

}  // namespace theta

#endif
