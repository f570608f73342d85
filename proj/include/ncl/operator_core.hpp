#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace ncl {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

/// Dense complex square matrix with a dimension invariant and an
/// optional label. Entries must be finite.
class ComplexOperator {
 public:
  ComplexOperator() = default;
  explicit ComplexOperator(Matrix m, std::string label = "");

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  const std::string& label() const { return label_; }

 private:
  Matrix mat_;
  std::string label_;
};

/// Self-adjoint wrapper; construction rejects matrices whose relative
/// hermiticity defect exceeds 1e-12.
class SelfAdjointOperator {
 public:
  explicit SelfAdjointOperator(const Matrix& m, std::string label = "");

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  double herm_defect() const { return herm_defect_; }

 private:
  Matrix mat_;
  double herm_defect_ = 0.0;
};

/// Eigendecomposition of a self-adjoint matrix. Eigenvalues ascending,
/// eigenvector phases fixed (largest-magnitude component real positive,
/// ties broken by lowest index) so repeated calls are bit-identical.
struct Spectrum {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

Matrix adjoint(const Matrix& a);
Complex trace(const Matrix& a);
Complex hs_inner(const Matrix& a, const Matrix& b);
double hs_norm(const Matrix& a);
Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

/// Largest singular value.
double spectral_norm(const Matrix& a);

Spectrum eigh(const SelfAdjointOperator& a);
Spectrum eigh(const Matrix& hermitian);

/// Eigenvalues only; much cheaper than eigh for large dimensions.
RealVector eigh_values(const Matrix& hermitian);

/// Matrix exponential, scaling-and-squaring Pade.
Matrix expm(const Matrix& a);

/// exp(i*scale*H) for self-adjoint H via its eigendecomposition.
Matrix expm_i_selfadjoint(const Matrix& h, double scale);

void require_same_dim(const Matrix& a, const Matrix& b, const char* where);

}  // namespace ncl
