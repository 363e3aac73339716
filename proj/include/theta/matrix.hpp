#ifndef THETA_MATRIX_HPP
#define THETA_MATRIX_HPP

#include <vector>

#include "theta/poly.hpp"

namespace theta {

// Square or rectangular matrix over an exact field, row major.
template <class K>
class Matrix {
public:
  Matrix(int rows, int cols, const K& fill)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw BadShape("negative dimension");
  }

  static Matrix identity(int n, const K& sample) {
    Matrix m(n, n, field_zero(sample));
    for (int i = 0; i < n; ++i) m.at(i, i) = field_one(sample);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  K& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const K& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
      if (!field_is_zero(e_[i] - o.e_[i])) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, e_.empty() ? K() : e_[0]);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw BadShape("matrix product shape mismatch");
    K zero = field_zero(e_[0]);
    Matrix r(rows_, o.cols_, zero);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& aik = at(i, k);
        if (field_is_zero(aik)) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = r.at(i, j) + aik * o.at(k, j);
      }
    return r;
  }

  Matrix pow(long e) const {
    if (!is_square()) throw BadShape("power of a non-square matrix");
    if (e < 0) return inverse().pow(-e);
    Matrix acc = identity(rows_, e_[0]);
    Matrix base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // Gauss-Jordan inverse; throws SingularMatrix when no pivot is available.
  Matrix inverse() const {
    if (!is_square()) throw BadShape("inverse of a non-square matrix");
    int n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n, e_[0]);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = col; r < n; ++r)
        if (!field_is_zero(a.at(r, col))) {
          pivot = r;
          break;
        }
      if (pivot < 0) throw SingularMatrix("matrix is not invertible");
      if (pivot != col) {
        for (int j = 0; j < n; ++j) {
          std::swap(a.at(pivot, j), a.at(col, j));
          std::swap(inv.at(pivot, j), inv.at(col, j));
        }
      }
      K piv_inv = field_inv(a.at(col, col));
      for (int j = 0; j < n; ++j) {
        a.at(col, j) = a.at(col, j) * piv_inv;
        inv.at(col, j) = inv.at(col, j) * piv_inv;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || field_is_zero(a.at(r, col))) continue;
        K f = a.at(r, col);
        for (int j = 0; j < n; ++j) {
          a.at(r, j) = a.at(r, j) - f * a.at(col, j);
          inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
        }
      }
    }
    return inv;
  }

  bool is_invertible() const {
    try {
      inverse();
      return true;
    } catch (const SingularMatrix&) {
      return false;
    }
  }

  bool is_diagonal() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (i != j && !field_is_zero(at(i, j))) return false;
    return true;
  }

  static Matrix block_diag(const Matrix& a, const Matrix& b) {
    K zero = field_zero(a.rows_ * a.cols_ > 0 ? a.e_[0] : b.e_[0]);
    Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_, zero);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j)
        r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
  }

private:
  int rows_, cols_;
  std::vector<K> e_;
};

// Characteristic polynomial det(X*I - M) by the Berkowitz algorithm. The
// computation is division free, so it is valid over any commutative
// coefficient field including small characteristic.
template <class K>
Poly<K> charpoly(const Matrix<K>& m) {
  if (!m.is_square()) throw BadShape("characteristic polynomial needs a square matrix");
  int n = m.rows();
  if (n == 0) throw BadShape("empty matrix");
  K zero = field_zero(m.at(0, 0));
  K one = field_one(m.at(0, 0));

  // p holds the characteristic polynomial of the leading r x r block,
  // highest degree first.
  std::vector<K> p{one};
  for (int r = 1; r <= n; ++r) {
    // First column of the (r+1) x r Toeplitz operator:
    // [1, -a_rr, -R C, -R M C, ..., -R M^{r-2} C]
    std::vector<K> t;
    t.reserve(r + 1);
    t.push_back(one);
    t.push_back(-m.at(r - 1, r - 1));
    if (r >= 2) {
      std::vector<K> w;  // starts as the column C
      w.reserve(r - 1);
      for (int i = 0; i < r - 1; ++i) w.push_back(m.at(i, r - 1));
      for (int j = 2; j <= r; ++j) {
        K s = zero;
        for (int i = 0; i < r - 1; ++i) s = s + m.at(r - 1, i) * w[i];
        t.push_back(-s);
        if (j < r) {
          std::vector<K> nw(r - 1, zero);
          for (int i = 0; i < r - 1; ++i)
            for (int k = 0; k < r - 1; ++k) nw[i] = nw[i] + m.at(i, k) * w[k];
          w = std::move(nw);
        }
      }
    }
    std::vector<K> np(r + 1, zero);
    for (size_t j = 0; j < p.size(); ++j)
      for (size_t i = j; i < j + t.size() && i < np.size(); ++i)
        np[i] = np[i] + t[i - j] * p[j];
    p = std::move(np);
  }

  std::vector<K> low_first(p.rbegin(), p.rend());
  return Poly<K>(std::move(low_first));
}

}  // namespace theta

#endif
