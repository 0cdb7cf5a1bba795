#include "ppalg/matrix.hpp"

namespace ppalg {

Matrix<Fp> reduce_mod(const QMatrix& a, std::uint32_t p) {
  Matrix<Fp> out(a.rows(), a.cols(), Fp(0, p));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = reduce_mod(a(i, j), p);
  return out;
}

}  // namespace ppalg
