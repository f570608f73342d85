#include "ncl/rng.hpp"

namespace ncl {

Matrix Rng::complex_matrix(int n) {
  Matrix m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      m(i, j) = Complex(gaussian(), gaussian());
    }
  }
  return m;
}

Matrix Rng::hermitian_matrix(int n) {
  Matrix m = complex_matrix(n);
  return (m + m.adjoint()) / 2.0;
}

Matrix Rng::unitary_matrix(int n) {
  // QR of a Ginibre matrix with the R-diagonal phase fix
  Matrix m = complex_matrix(n);
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

}  // namespace ncl
