#include "ppalg/int_matrix.hpp"

namespace ppalg {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  for (const auto& row : init) {
    if (row.size() != cols_) throw DimensionMismatch("ragged integer matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rational(const QMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      if (x.get_den() != 1 || !x.get_num().fits_slong_p()) {
        throw InvalidArgument("matrix entry is not a machine integer: " + x.get_str());
      }
      out(i, j) = x.get_num().get_si();
    }
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::leading_columns(std::size_t k) const {
  if (k > cols_) throw DimensionMismatch("leading_columns: too many columns requested");
  IntMatrix out(rows_, k);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& perm) const {
  // out(a, b) = in(perm[a], perm[b]) restricted to the available columns
  IntMatrix out(rows_, cols_);
  for (std::size_t a = 0; a < rows_; ++a)
    for (std::size_t b = 0; b < cols_; ++b) out(a, b) = (*this)(perm[a], perm[b]);
  return out;
}

QMatrix IntMatrix::to_rational() const {
  QMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = Rational(static_cast<long>((*this)(i, j)));
  return out;
}

bool IntMatrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("integer matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
  }
  return os << ']';
}

}  // namespace ppalg
