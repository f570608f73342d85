#pragma once

#include "ncl/fock.hpp"
#include "ncl/operator_core.hpp"

#include <string>

namespace ncl {

struct NotSelfAdjoint : Error {
  double defect;
  explicit NotSelfAdjoint(double d);
};

struct NotPositive : Error {
  double most_negative_eigenvalue;
  explicit NotPositive(double lam);
};

struct TraceNotOne : Error {
  double defect;
  explicit TraceNotOne(double d);
};

/// Positive, unit-trace, self-adjoint operator. Violations are errors,
/// never silently repaired.
class DensityMatrix {
 public:
  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  double min_eigenvalue() const { return min_eig_; }
  double trace_defect() const { return trace_defect_; }

  friend DensityMatrix make_density(const Matrix& a);

 private:
  Matrix mat_;
  double min_eig_ = 0.0;
  double trace_defect_ = 0.0;
};

DensityMatrix make_density(const Matrix& a);

enum class VectorMode { HilbertSchmidt, Jordan };

/// HilbertSchmidt: rho_B = B B^dag / tr(B B^dag), invariant under right
/// multiplication of B by a unitary. Jordan: rho = B^2 / tr(B^2) for
/// self-adjoint B.
DensityMatrix density_from_vector(const Matrix& b, VectorMode mode);

/// tr(rho . A); cross-checked against tr(rho A).
double expectation(const DensityMatrix& rho, const Matrix& a);

/// Principal square root via eigh; non-negative and self-adjoint.
Matrix sqrt_psd(const DensityMatrix& rho);

struct PurityResult {
  bool pure;
  double defect;  // 1 - tr(rho^2)
};

PurityResult is_pure(const DensityMatrix& rho, double tol = 1e-10);

enum class Subsystem { Plus, Minus };

/// Partial trace over the complementary slot of a 2-mode space, by
/// index contraction over the slot-0-slowest ordering.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const CompositeSpace& space, Subsystem keep);

struct ProductState {
  DensityMatrix rho_plus;
  DensityMatrix rho_minus;
  DensityMatrix joint;  // kron(rho_plus, rho_minus)
};

ProductState make_product_state(const DensityMatrix& rho_plus,
                                const DensityMatrix& rho_minus);

struct Theorem3Result {
  bool joint_pure;
  bool plus_rank_one;
  bool minus_rank_one;
  double factor_reconstruction_residual;  // ||joint - P0+ (x) P0-||
  bool sign_ambiguity_verified;  // (-P0+) (x) (-P0-) squares to the same rho
  std::string notes;
};

/// Joint purity iff both factors are rank-1 projectors; for a pure
/// joint state recovers the factors (up to sign) and checks the
/// product form.
Theorem3Result theorem3_check(const ProductState& st,
                              const CompositeSpace& space);

}  // namespace ncl
