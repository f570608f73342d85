#pragma once

#include "ncl/operator_core.hpp"

#include <array>
#include <functional>
#include <utility>
#include <vector>

namespace ncl {

/// A . B = (AB + BA)/2. Commutative, non-associative.
Matrix jordan_product(const Matrix& a, const Matrix& b);

/// [A,B,C] = (A.B).C - A.(B.C).
Matrix associator(const Matrix& a, const Matrix& b, const Matrix& c);

/// (1/4)[B,[A,C]]; equals the associator in any special Jordan algebra.
Matrix associator_via_double_commutator(const Matrix& a, const Matrix& b,
                                        const Matrix& c);

/// ||(A.B).A^2 - A.(B.A^2)|| / scale with scale = ||A||^2 ||B||.
double jordan_identity_residual(const Matrix& a, const Matrix& b);

/// [L_S, L_R] v = S.(R.v) - R.(S.v); equals associator(R, v, S).
Matrix left_commutator_apply(const Matrix& s, const Matrix& r,
                             const Matrix& v);

/// Left multiplication L_A as a dim^2 x dim^2 superoperator acting on
/// column-major vec(B).
Matrix left_mult_matrix(const Matrix& a);

struct JBAxiomReport {
  double csq_residual;      // | ||A^2|| - ||A||^2 | / ||A||^2
  double positivity_margin; // max{||A^2||, ||B||^2} - ||A^2 - B^2||
  double banach_margin;     // ||A|| ||B|| - ||A.B||
  bool csq_ok;
  bool positivity_ok;       // the paper's printed (asymmetric) form
  bool banach_ok;
};

JBAxiomReport jb_axiom_report(const Matrix& a, const Matrix& b,
                              double tol = 1e-12);

enum class BasisNormalization { Paper, Orthonormal };

/// Real basis of the n^2-dimensional space of self-adjoint n x n
/// matrices: n diagonal projectors, n(n-1)/2 symmetric and n(n-1)/2
/// antisymmetric off-diagonal elements. In Paper normalization the
/// off-diagonal families have Jordan-trace norm^2 = 1/2; Orthonormal
/// rescales them by sqrt(2).
struct JordanBasis {
  std::vector<Matrix> elements;
  BasisNormalization normalization;

  std::vector<double> expand(const Matrix& selfadjoint) const;
  Matrix reconstruct(const std::vector<double>& coeffs) const;
};

JordanBasis jordan_basis(int n, BasisNormalization norm);

/// Residuals of the three Jordan-module identities for (A, B, w).
std::array<double, 3> jordan_module_axioms(const Matrix& a, const Matrix& b,
                                           const Matrix& w);

/// Residuals of the two Jordan-representation identities for pi_J = L,
/// with the Jordan product of superoperators (half anticommutator of
/// composition). Materializes dim^2 x dim^2 matrices.
std::array<double, 2> representation_axioms(const Matrix& a, const Matrix& b);

/// ||H - i sum_j [L_j, R_j]|| / ||H||. Also checks i[L,R] self-adjoint.
double decomposition_check(const Matrix& h,
                           const std::vector<std::pair<Matrix, Matrix>>& pairs);

}  // namespace ncl
