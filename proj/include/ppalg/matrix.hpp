#pragma once

// Dense matrices over an exact field and the elimination kernels built on
// them. Everything is a template over the scalar type so that the same code
// runs over Q (Rational) and F_p (Fp).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ppalg/errors.hpp"
#include "ppalg/scalar.hpp"

namespace ppalg {

template <class F>
class Matrix {
 public:
  using value_type = F;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, F zero = F())
      : rows_(rows), cols_(cols), data_(rows * cols, zero), zero_(zero) {}

  /// Row-wise literal; convenient for tests and fixtures.
  Matrix(std::initializer_list<std::initializer_list<long>> rows_init) {
    rows_ = rows_init.size();
    cols_ = rows_ ? rows_init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows_init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      for (long v : row) data_.push_back(from_int_like(zero_, v));
    }
  }

  static Matrix identity(std::size_t n, F zero = F()) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  const F& zero() const { return zero_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<F>& data() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const F& x) { return ppalg::is_zero(x); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1, zero_);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  Matrix columns(const std::vector<std::size_t>& idx) const {
    Matrix c(rows_, idx.size(), zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) c(i, k) = (*this)(i, idx[k]);
    return c;
  }

  Matrix rows_subset(const std::vector<std::size_t>& idx) const {
    Matrix c(idx.size(), cols_, zero_);
    for (std::size_t k = 0; k < idx.size(); ++k)
      for (std::size_t j = 0; j < cols_; ++j) c(k, j) = (*this)(idx[k], j);
    return c;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_, pick_zero(a, b));
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (ppalg::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& bkj = b(k, j);
          if (!ppalg::is_zero(bkj)) c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  static F pick_zero(const Matrix& a, const Matrix& b) {
    // Prefer a prototype that carries a modulus (matters for F_p only).
    if constexpr (std::is_same_v<F, Fp>) {
      return a.zero_.modulus() ? a.zero_ : b.zero_;
    } else {
      return a.zero_;
    }
  }

  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
  F zero_{};
};

using QMatrix = Matrix<Rational>;

template <class F>
std::ostream& operator<<(std::ostream& os, const Matrix<F>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      if constexpr (std::is_same_v<F, Rational>) {
        os << m(i, j).get_str();
      } else {
        os << m(i, j).value();
      }
    }
  }
  return os << ']';
}

template <class F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  Matrix<F> c(a.rows(), a.cols() + b.cols(), a.zero());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

template <class F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  Matrix<F> c(a.rows() + b.rows(), a.cols(), a.zero());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

/// Reduced row echelon form together with the pivot columns.
template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination. The pivot in each column is the first nonzero
/// entry at or below the current row.
template <class F>
Echelon<F> rref(Matrix<F> a) {
  Echelon<F> out;
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && is_zero(a(piv, col))) ++piv;
    if (piv == m) continue;
    if (piv != row) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(piv, j), a(row, j));
    }
    F inv = one_like(a(row, col)) / a(row, col);
    for (std::size_t j = col; j < n; ++j) {
      if (!is_zero(a(row, j))) a(row, j) *= inv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      F factor = a(i, col);
      for (std::size_t j = col; j < n; ++j) {
        if (!is_zero(a(row, j))) a(i, j) -= factor * a(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
  return rref(a).rank();
}

/// Null-space basis as the columns of a (cols x k) matrix. Basis vector t
/// has a 1 in free column free[t] and 0 in every other free column, so the
/// coordinates of any kernel vector are read off at the free positions.
template <class F>
struct Kernel {
  Matrix<F> basis;
  std::vector<std::size_t> free;
};

template <class F>
Kernel<F> kernel_of_echelon(const Echelon<F>& e, std::size_t n) {
  const F zero = e.reduced.zero();
  std::vector<char> is_pivot(n, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  Kernel<F> k;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) k.free.push_back(j);
  k.basis = Matrix<F>(n, k.free.size(), zero);
  for (std::size_t t = 0; t < k.free.size(); ++t) {
    const std::size_t fcol = k.free[t];
    k.basis(fcol, t) = one_like(zero);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const F& v = e.reduced(r, fcol);
      if (!is_zero(v)) k.basis(e.pivots[r], t) = -v;
    }
  }
  return k;
}

template <class F>
Kernel<F> kernel(const Matrix<F>& a) {
  return kernel_of_echelon(rref(a), a.cols());
}

template <class F>
struct RankKernel {
  std::size_t rank = 0;
  std::vector<Matrix<F>> kernel_basis;
};

template <class F>
RankKernel<F> rank_and_kernel(const Matrix<F>& a) {
  auto e = rref(a);
  auto k = kernel_of_echelon(e, a.cols());
  RankKernel<F> out;
  out.rank = e.rank();
  for (std::size_t t = 0; t < k.basis.cols(); ++t) out.kernel_basis.push_back(k.basis.column(t));
  return out;
}

template <class F>
struct LinearSolution {
  std::optional<Matrix<F>> particular;
  std::vector<Matrix<F>> kernel_basis;
};

/// Solve A x = b (b may carry several right-hand sides). Returns an absent
/// particular solution when the system is inconsistent.
template <class F>
LinearSolution<F> solve_linear(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_linear: row count mismatch");
  const std::size_t n = a.cols();
  auto e = rref(hstack(a, b));
  LinearSolution<F> out;
  bool consistent = true;
  for (auto p : e.pivots)
    if (p >= n) consistent = false;
  if (consistent) {
    Matrix<F> x(n, b.cols(), a.zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
    out.particular = std::move(x);
  }
  Echelon<F> ea{e.reduced.block(0, 0, a.rows(), n), {}};
  for (auto p : e.pivots)
    if (p < n) ea.pivots.push_back(p);
  auto k = kernel_of_echelon(ea, n);
  for (std::size_t t = 0; t < k.basis.cols(); ++t) out.kernel_basis.push_back(k.basis.column(t));
  return out;
}

template <class F>
Matrix<F> invert(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("invert: matrix not square");
  const std::size_t n = a.rows();
  auto e = rref(hstack(a, Matrix<F>::identity(n, a.zero())));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] >= n)) throw SingularMatrix();
  return e.reduced.block(0, n, n, n);
}

/// Independent columns of `a` spanning its column space.
template <class F>
Matrix<F> column_space(const Matrix<F>& a) {
  return a.columns(rref(a).pivots);
}

/// Exact determinant via elimination.
template <class F>
F determinant(Matrix<F> a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant: matrix not square");
  const std::size_t n = a.rows();
  F det = one_like(a.zero());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(a(piv, col))) ++piv;
    if (piv == n) return zero_like(a.zero());
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    F inv = one_like(a.zero()) / a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (is_zero(a(i, col))) continue;
      F f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

/// Coefficients c_0..c_{m-1} of the unique polynomial of degree < m through
/// the m given points (Newton divided differences, expanded to monomials).
template <class F>
std::vector<F> interpolate_polynomial(const std::vector<std::pair<F, F>>& points) {
  const std::size_t m = points.size();
  if (m == 0) return {};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (points[i].first == points[j].first) throw DuplicateNode("duplicate interpolation node");
  const F zero = zero_like(points[0].first);
  std::vector<F> dd(m, zero);
  for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
      if (i == level) break;
    }
  }
  // Horner-style expansion of the Newton form.
  std::vector<F> coeffs(m, zero);
  coeffs[0] = dd[m - 1];
  std::size_t deg = 0;
  for (std::size_t k = m - 1; k-- > 0;) {
    // coeffs <- coeffs * (x - x_k) + dd[k]
    std::vector<F> next(m, zero);
    for (std::size_t d = 0; d <= deg; ++d) {
      next[d + 1] += coeffs[d];
      next[d] -= coeffs[d] * points[k].first;
    }
    next[0] += dd[k];
    coeffs = std::move(next);
    ++deg;
  }
  return coeffs;
}

template <class F>
F evaluate_polynomial(const std::vector<F>& coeffs, const F& x) {
  F acc = zero_like(x);
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

Matrix<Fp> reduce_mod(const QMatrix& a, std::uint32_t p);

}  // namespace ppalg
