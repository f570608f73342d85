#include "ncl/operator_core.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <lapacke.h>

#include <cmath>
#include <utility>

namespace ncl {

namespace {

void require_square_finite(const Matrix& m, const char* where) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(where) + ": matrix is not square");
  }
  if (!m.allFinite()) {
    throw DomainError(std::string(where) + ": non-finite entries");
  }
}

}  // namespace

ComplexOperator::ComplexOperator(Matrix m, std::string label)
    : mat_(std::move(m)), label_(std::move(label)) {
  require_square_finite(mat_, "ComplexOperator");
}

SelfAdjointOperator::SelfAdjointOperator(const Matrix& m, std::string label)
    : mat_(m) {
  (void)label;
  require_square_finite(mat_, "SelfAdjointOperator");
  const double scale = mat_.norm();
  herm_defect_ = scale > 0.0 ? (mat_ - mat_.adjoint()).norm() / scale : 0.0;
  if (herm_defect_ > 1e-12) {
    throw DomainError("SelfAdjointOperator: hermiticity defect " +
                      std::to_string(herm_defect_));
  }
}

Matrix adjoint(const Matrix& a) { return a.adjoint(); }

Complex trace(const Matrix& a) { return a.trace(); }

Complex hs_inner(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "hs_inner");
  return (a.adjoint() * b).trace();
}

double hs_norm(const Matrix& a) { return a.norm(); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "commutator");
  return a * b - b * a;
}

namespace {

// LAPACK zheevd; Eigen's own solver is too slow past dim ~1000.
void zheevd_inplace(Matrix& a, RealVector& w, bool vectors) {
  const int n = static_cast<int>(a.rows());
  w.resize(n);
  if (n == 0) return;
  const int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, vectors ? 'V' : 'N', 'L', n,
      reinterpret_cast<lapack_complex_double*>(a.data()), n, w.data());
  if (info != 0) {
    throw Error("eigh: zheevd failed to converge, info=" +
                std::to_string(info));
  }
}

void fix_phases(Matrix& v) {
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
      const double m = std::abs(v(r, c));
      if (m > best * (1.0 + 1e-14)) {  // strict improvement, lowest index wins
        best = m;
        imax = r;
      }
    }
    const Complex pivot = v(imax, c);
    if (std::abs(pivot) > 0.0) {
      v.col(c) *= std::conj(pivot) / std::abs(pivot);
    }
  }
}

}  // namespace

Spectrum eigh(const Matrix& hermitian) {
  require_square_finite(hermitian, "eigh");
  Matrix a = (hermitian + hermitian.adjoint()) / 2.0;
  RealVector w;
  zheevd_inplace(a, w, true);
  fix_phases(a);
  return Spectrum{std::move(w), std::move(a)};
}

Spectrum eigh(const SelfAdjointOperator& a) { return eigh(a.mat()); }

RealVector eigh_values(const Matrix& hermitian) {
  require_square_finite(hermitian, "eigh_values");
  Matrix a = (hermitian + hermitian.adjoint()) / 2.0;
  RealVector w;
  zheevd_inplace(a, w, false);
  return w;
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  // sqrt of the largest eigenvalue of A^dag A
  Matrix g = a.adjoint() * a;
  RealVector w = eigh_values(g);
  const double top = w(w.size() - 1);
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

Matrix expm(const Matrix& a) {
  require_square_finite(a, "expm");
  return a.exp();
}

Matrix expm_i_selfadjoint(const Matrix& h, double scale) {
  Spectrum s = eigh(h);
  Vector phases(s.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, scale * s.eigenvalues(k)));
  }
  return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(where) + ": dimension mismatch " +
                            std::to_string(a.rows()) + " vs " +
                            std::to_string(b.rows()));
  }
}

}  // namespace ncl
