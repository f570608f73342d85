#pragma once

#include "ncl/fock.hpp"
#include "ncl/operator_core.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ncl {

struct LandauParams {
  double m = 1.0;        // mass
  double omega = 1.0;    // trap frequency
  double omega_L = 2.0;  // Larmor frequency eB/mc
  double theta = 0.1;    // non-commutativity parameter (length^2)
  double hbar = 1.0;

  void validate() const;
};

/// theta = -hbar c / (e B), the lowest-Landau-level identification.
double theta_landau_limit(double hbar, double e, double B, double c);

struct DerivedFrequencies {
  double xi;             // inverse length scale
  double Omega;
  double omega_L_tilde;
  double Omega_plus;     // Omega + omega_L_tilde/2
  double Omega_minus;    // Omega - omega_L_tilde/2
};

DerivedFrequencies derive_frequencies(const LandauParams& p);

enum class Representation { CanonicalBopp, PaperChiral };

const char* to_string(Representation r);

/// The planar operators on a 2-mode composite space, in one of the two
/// representations. CanonicalBopp realizes [x,y] = i theta via the Bopp
/// shift on commuting quadratures; PaperChiral takes A+ = a (x) I,
/// A- = I (x) a and assembles x, y, p_x, p_y from the inverse ladder
/// formulas (there [x,y] = 0).
struct OperatorSet {
  Representation representation;
  CompositeSpace space;
  Matrix x, y, p_x, p_y;
  Matrix z, z_bar, p_z, p_zbar;
  Matrix A_plus, A_minus;
  Matrix H_theta;
};

OperatorSet build_canonical_operators(const LandauParams& p,
                                      const CompositeSpace& space);
OperatorSet build_paper_chiral_operators(const LandauParams& p,
                                         const DerivedFrequencies& freqs,
                                         const CompositeSpace& space);

/// H = (1/2m)(p_x + (m wL/2) y)^2 + (1/2m)(p_y - (m wL/2) x)^2
///     + (m w^2/2)(x^2 + y^2), from the operators of `ops`.
Matrix build_hamiltonian_quadratic(const LandauParams& p,
                                   const OperatorSet& ops);

/// hbar Wp (N+ + 1/2) + hbar Wm (N- + 1/2); diagonal in the occupation
/// basis.
Matrix build_hamiltonian_chiral(const LandauParams& p,
                                const DerivedFrequencies& freqs,
                                const CompositeSpace& space);

/// Sorted multiset {hbar Wp (n+ + 1/2) + hbar Wm (n- + 1/2)} truncated
/// to the K lowest values, ties kept with multiplicity.
std::vector<double> spectrum_closed_form(const LandauParams& p,
                                         const DerivedFrequencies& freqs,
                                         int k);

struct ConvergenceReport {
  std::vector<double> levels;          // at n_trunc
  std::vector<double> levels_doubled;  // at 2 n_trunc
  double max_rel_drift;
  bool converged;
};

/// Lowest K eigenvalues of the Hamiltonian produced by `builder`,
/// recomputed at doubled truncation; converged when the relative drift
/// of every retained level is <= drift_tol.
ConvergenceReport spectrum_numerical(
    const std::function<Matrix(const CompositeSpace&)>& builder, int k,
    const CompositeSpace& space, double drift_tol = 1e-8);

enum class CoefficientSource { PaperLiteral, Calibrated };

/// The generator operators of the associator relations. The left
/// generators are 4 H_theta; the right generators are two-term linear
/// combinations with either the paper's printed coefficients or the
/// least-squares calibrated ones.
struct TheoremOneOperators {
  CoefficientSource source;
  Matrix y_L, y_R, pxL, pxR, pyL, pyR;
  // coefficient table: {c1, c2} per relation, plus the paper's values
  double y_c1, y_c2;
  double px_c1, px_c2;
  double py_c1, py_c2;
  double paper_y_c1, paper_y_c2;
  double paper_px_c1, paper_px_c2;
  double paper_py_c1, paper_py_c2;
  double fit_residual = 0.0;  // worst of the three fits (calibrated only)
};

TheoremOneOperators theorem1_operators(const LandauParams& p,
                                       const DerivedFrequencies& freqs,
                                       const OperatorSet& ops);

/// Solves i[H, c1 G1 + c2 G2] = target in least squares over the safe
/// subspace for each of the three relations.
TheoremOneOperators calibrate_theorem1(const LandauParams& p,
                                       const DerivedFrequencies& freqs,
                                       const OperatorSet& ops);

struct AssociatorRelationResult {
  std::string relation;     // "y", "px", "py"
  double residual_direct;   // via the associator definition
  double residual_eq7;      // via the double-commutator form
  double route_agreement;   // | direct - eq7 | residual
};

/// Evaluates [y_L, x, y_R] - theta, [pxL, x, pxR] - hbar,
/// [pyL, y, pyR] - hbar on the safe subspace, by both routes.
std::vector<AssociatorRelationResult> verify_associator_relations(
    const LandauParams& p, const TheoremOneOperators& thm1,
    const OperatorSet& ops);

}  // namespace ncl
