#include "ncl/jordan.hpp"

#include <algorithm>
#include <cmath>

namespace ncl {

Matrix jordan_product(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b, "jordan_product");
  return (a * b + b * a) / 2.0;
}

Matrix associator(const Matrix& a, const Matrix& b, const Matrix& c) {
  require_same_dim(a, b, "associator");
  require_same_dim(a, c, "associator");
  return jordan_product(jordan_product(a, b), c) -
         jordan_product(a, jordan_product(b, c));
}

Matrix associator_via_double_commutator(const Matrix& a, const Matrix& b,
                                        const Matrix& c) {
  require_same_dim(a, b, "associator_via_double_commutator");
  require_same_dim(a, c, "associator_via_double_commutator");
  return commutator(b, commutator(a, c)) / 4.0;
}

double jordan_identity_residual(const Matrix& a, const Matrix& b) {
  const Matrix a2 = a * a;
  const Matrix lhs = jordan_product(jordan_product(a, b), a2);
  const Matrix rhs = jordan_product(a, jordan_product(b, a2));
  const double scale =
      std::max(1e-300, spectral_norm(a) * spectral_norm(a) * spectral_norm(b));
  return spectral_norm(lhs - rhs) / scale;
}

Matrix left_commutator_apply(const Matrix& s, const Matrix& r,
                             const Matrix& v) {
  require_same_dim(s, v, "left_commutator_apply");
  require_same_dim(r, v, "left_commutator_apply");
  return jordan_product(s, jordan_product(r, v)) -
         jordan_product(r, jordan_product(s, v));
}

Matrix left_mult_matrix(const Matrix& a) {
  // acts on column-major vec(B): vec(A.B) = (I (x) A + A^T (x) I)/2 vec(B)
  const int n = static_cast<int>(a.rows());
  const Matrix id = Matrix::Identity(n, n);
  return (kron(id, a) + kron(a.transpose(), id)) / 2.0;
}

JBAxiomReport jb_axiom_report(const Matrix& a, const Matrix& b, double tol) {
  JBAxiomReport rep{};
  const double na = spectral_norm(a);
  const double nb = spectral_norm(b);
  const double na2 = spectral_norm(a * a);
  rep.csq_residual = std::abs(na2 - na * na) / std::max(1e-300, na * na);
  rep.csq_ok = rep.csq_residual <= tol;
  // the paper's printed (asymmetric) positivity condition
  rep.positivity_margin =
      std::max(na2, nb * nb) - spectral_norm(a * a - b * b);
  rep.positivity_ok = rep.positivity_margin >= -tol * std::max(na2, nb * nb);
  rep.banach_margin = na * nb - spectral_norm(jordan_product(a, b));
  rep.banach_ok = rep.banach_margin >= -tol * std::max(1.0, na * nb);
  return rep;
}

JordanBasis jordan_basis(int n, BasisNormalization norm) {
  if (n < 1) throw DomainError("jordan_basis: n must be >= 1");
  JordanBasis basis;
  basis.normalization = norm;
  const double off_scale =
      norm == BasisNormalization::Orthonormal ? std::sqrt(2.0) : 1.0;
  for (int j = 0; j < n; ++j) {
    Matrix e = Matrix::Zero(n, n);
    e(j, j) = 1.0;
    basis.elements.push_back(e);
  }
  for (int j = 1; j < n; ++j) {
    for (int k = 0; k < j; ++k) {
      Matrix e = Matrix::Zero(n, n);
      e(j, k) = 0.5 * off_scale;
      e(k, j) = 0.5 * off_scale;
      basis.elements.push_back(e);
    }
  }
  for (int j = 1; j < n; ++j) {
    for (int k = 0; k < j; ++k) {
      Matrix e = Matrix::Zero(n, n);
      e(j, k) = Complex(0.0, 0.5 * off_scale);
      e(k, j) = Complex(0.0, -0.5 * off_scale);
      basis.elements.push_back(e);
    }
  }
  return basis;
}

std::vector<double> JordanBasis::expand(const Matrix& x) const {
  std::vector<double> coeffs;
  coeffs.reserve(elements.size());
  for (const auto& e : elements) {
    // tr(e . X) with Gram normalization of the family
    const double g = std::real(trace(jordan_product(e, e)));
    coeffs.push_back(std::real(trace(jordan_product(e, x))) / g);
  }
  return coeffs;
}

Matrix JordanBasis::reconstruct(const std::vector<double>& coeffs) const {
  if (coeffs.size() != elements.size()) {
    throw DimensionMismatch("JordanBasis::reconstruct: coefficient count");
  }
  Matrix out = Matrix::Zero(elements[0].rows(), elements[0].cols());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out += coeffs[i] * elements[i];
  }
  return out;
}

std::array<double, 3> jordan_module_axioms(const Matrix& a, const Matrix& b,
                                           const Matrix& w) {
  const double scale = std::max(
      1e-300, spectral_norm(a) * std::max(1.0, spectral_norm(b)) *
                  std::max(1.0, spectral_norm(w)) * std::max(1.0, spectral_norm(a)));
  const Matrix a2 = a * a;
  const double r1 =
      spectral_norm(jordan_product(a, w) - jordan_product(w, a)) / scale;
  const double r2 = spectral_norm(jordan_product(a2, jordan_product(a, w)) -
                                  jordan_product(a, jordan_product(a2, w))) /
                    scale;
  const Matrix lhs = 2.0 * jordan_product(
                               a, jordan_product(b, jordan_product(a, w))) +
                     jordan_product(jordan_product(b, a2), w);
  const Matrix rhs =
      2.0 * jordan_product(jordan_product(a, b), jordan_product(a, w)) +
      jordan_product(a2, jordan_product(b, w));
  const double r3 = spectral_norm(lhs - rhs) / scale;
  return {r1, r2, r3};
}

std::array<double, 2> representation_axioms(const Matrix& a, const Matrix& b) {
  const Matrix a2 = a * a;
  const Matrix la = left_mult_matrix(a);
  const Matrix lb = left_mult_matrix(b);
  const Matrix la2 = left_mult_matrix(a2);
  const double scale =
      std::max(1e-300, spectral_norm(la) * spectral_norm(la) *
                           std::max(1.0, spectral_norm(lb)));
  const double r1 = spectral_norm(la2 * la - la * la2) / scale;
  // linearized Jordan identity: 2 L_a L_b L_a + L_{a²∙b} = 2 L_{a∙b} L_a + L_{a²} L_b
  const Matrix lhs = 2.0 * la * lb * la +
                     left_mult_matrix(jordan_product(a2, b));
  const Matrix rhs = 2.0 * left_mult_matrix(jordan_product(a, b)) * la +
                     la2 * lb;
  const double r2 = spectral_norm(lhs - rhs) / scale;
  return {r1, r2};
}

double decomposition_check(
    const Matrix& h, const std::vector<std::pair<Matrix, Matrix>>& pairs) {
  Matrix sum = Matrix::Zero(h.rows(), h.cols());
  for (const auto& [l, r] : pairs) {
    const Matrix term = Complex(0.0, 1.0) * commutator(l, r);
    // i[L,R] of self-adjoint L,R is itself self-adjoint
    if (spectral_norm(term - term.adjoint()) >
        1e-12 * std::max(1.0, spectral_norm(term))) {
      throw DomainError("decomposition_check: i[L,R] not self-adjoint");
    }
    sum += term;
  }
  const double nh = spectral_norm(h);
  if (nh == 0.0) return spectral_norm(sum) == 0.0 ? 0.0 : 1.0;
  return spectral_norm(h - sum) / nh;
}

}  // namespace ncl
