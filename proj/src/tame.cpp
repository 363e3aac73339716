#include "theta/tame.hpp"

#include "theta/rallis.hpp"

namespace theta {

bool satake_crosscheck(const Matrix<RatFunc>& frob, const Matrix<RatFunc>& gen,
                       int n, const RingContext& ctx) {
  if (!frob.is_square() || !frob.is_diagonal())
    throw NotDiagonal("frobenius matrix must be diagonal");
  if (!(gen == Matrix<RatFunc>::identity(gen.rows(), RatFunc(Rational(1)))))
    throw NotDiagonal("sigma must be the identity");
  std::vector<BaseScalar> entries;
  entries.reserve(frob.rows());
  for (int i = 0; i < frob.rows(); ++i) {
    auto e = frob.at(i, i).to_base_scalar();
    if (!e || !e->is_unit())
      throw NonInvertibleEntry("diagonal entries must be Laurent units");
    entries.push_back(*e);
  }
  return satake_crosscheck(entries, n, ctx);
}

bool satake_crosscheck(const std::vector<BaseScalar>& diag_entries, int n,
                       const RingContext& ctx) {
  int m = static_cast<int>(diag_entries.size());
  if (m < 1 || m > n) throw BadShape("need 1 <= m <= n");

  // Galois route: transfer the diagonal pair and read off the Frobenius
  // diagonal.
  Matrix<RatFunc> F(m, m, RatFunc());
  for (int i = 0; i < m; ++i) {
    if (!diag_entries[i].is_unit())
      throw NonInvertibleEntry("diagonal entries must be units");
    F.at(i, i) = RatFunc::from_base_scalar(diag_entries[i]);
  }
  TameParam<RatFunc> P = make_tame_param(
      F, Matrix<RatFunc>::identity(m, RatFunc(Rational(1))), ctx);
  TameParam<RatFunc> image = l_theta(P, n, RatFunc::v());
  if (!image.frob.is_diagonal())
    throw NotDiagonal("transfer of a diagonal pair must stay diagonal");

  ParameterPoint galois;
  galois.entries.reserve(n);
  for (int i = 0; i < n; ++i) {
    auto e = image.frob.at(i, i).to_base_scalar();
    if (!e) throw NonInvertibleEntry("transfer left the Laurent ring");
    galois.entries.push_back(*e);
  }

  // Spectral route: the parameter-point image of the same diagonal.
  ParameterPoint source{diag_entries};
  ParameterPoint spectral = point_image(source, n);

  return point_multiset_equal(galois, spectral);
}

}  // namespace theta
