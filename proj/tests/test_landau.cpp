#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ncl/landau.hpp"

#include <cmath>

using namespace ncl;

namespace {

LandauParams natural(double omega, double omega_L, double theta) {
  LandauParams p;
  p.m = 1.0;
  p.hbar = 1.0;
  p.omega = omega;
  p.omega_L = omega_L;
  p.theta = theta;
  return p;
}

double comm_defect(const OperatorSet& ops, const Matrix& a, const Matrix& b,
                   double target) {
  const Matrix id = Matrix::Identity(ops.space.dim, ops.space.dim);
  return assert_on_safe(commutator(a, b), Complex(0, 1) * target * id,
                        ops.space);
}

}  // namespace

TEST_CASE("derived frequencies at theta = 0") {
  const LandauParams p = natural(1.0, 2.0, 0.0);
  const DerivedFrequencies f = derive_frequencies(p);
  CHECK(f.Omega == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(f.omega_L_tilde == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(f.Omega_plus == doctest::Approx(std::sqrt(2.0) + 1.0).epsilon(1e-14));
  CHECK(f.Omega_minus == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-14));
  CHECK(f.xi * f.xi == doctest::Approx(f.Omega).epsilon(1e-14));  // m Omega/hbar
}

TEST_CASE("omega_L_tilde is finite at omega_L = 0") {
  const LandauParams p = natural(1.0, 0.0, 0.3);
  const DerivedFrequencies f = derive_frequencies(p);
  CHECK(f.omega_L_tilde == doctest::Approx(-0.3).epsilon(1e-14));
}

TEST_CASE("parameter validation") {
  LandauParams p = natural(1.0, 2.0, 0.1);
  p.m = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  CHECK_THROWS_AS(natural(0.0, 0.0, 0.0).validate(), DomainError);
  LandauParams q = natural(1.0, -1.0, 0.0);
  CHECK_THROWS_AS(q.validate(), DomainError);
  CHECK_NOTHROW(natural(0.0, 1.0, 0.0).validate());
  CHECK(theta_landau_limit(1.0, -1.0, 2.0, 1.0) == doctest::Approx(0.5));
  CHECK_THROWS_AS(theta_landau_limit(1.0, 0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("canonical representation satisfies the deformed algebra") {
  const CompositeSpace sp = make_space({ModeSpec{16, 4}, ModeSpec{16, 4}});
  for (double theta : {0.0, 0.1, 0.5}) {
    const LandauParams p = natural(1.0, 2.0, theta);
    const OperatorSet ops = build_canonical_operators(p, sp);
    CHECK(comm_defect(ops, ops.x, ops.y, theta) < 1e-10);
    CHECK(comm_defect(ops, ops.x, ops.p_x, 1.0) < 1e-10);
    CHECK(comm_defect(ops, ops.y, ops.p_y, 1.0) < 1e-10);
    CHECK(comm_defect(ops, ops.x, ops.p_y, 0.0) < 1e-10);
    CHECK(comm_defect(ops, ops.y, ops.p_x, 0.0) < 1e-10);
    CHECK(comm_defect(ops, ops.p_x, ops.p_y, 0.0) < 1e-10);
  }
}

TEST_CASE("chiral representation keeps [x,p] canonical but [x,y] = 0") {
  const LandauParams p = natural(1.0, 2.0, 0.1);
  const DerivedFrequencies f = derive_frequencies(p);
  const CompositeSpace sp = make_space({ModeSpec{16, 4}, ModeSpec{16, 4}});
  const OperatorSet ops = build_paper_chiral_operators(p, f, sp);
  CHECK(comm_defect(ops, ops.x, ops.p_x, 1.0) < 1e-12);
  CHECK(comm_defect(ops, ops.y, ops.p_y, 1.0) < 1e-12);
  CHECK(comm_defect(ops, ops.x, ops.y, 0.0) < 1e-12);
  // ladder normalization [A, A^dag] = 1 on the safe subspace
  const Matrix id = Matrix::Identity(sp.dim, sp.dim);
  CHECK(assert_on_safe(commutator(ops.A_plus, Matrix(ops.A_plus.adjoint())),
                       id, sp) < 1e-14);
}

TEST_CASE("chiral Hamiltonian is the closed-form spectrum by construction") {
  const LandauParams p = natural(1.0, 2.0, 0.1);
  const DerivedFrequencies f = derive_frequencies(p);
  const CompositeSpace sp = make_space({ModeSpec{8, 2}, ModeSpec{8, 2}});
  const Matrix h = build_hamiltonian_chiral(p, f, sp);
  const RealVector w = eigh_values(h);
  const auto closed = spectrum_closed_form(p, f, 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(w(i) == doctest::Approx(closed[i]).epsilon(1e-12));
  }
}

TEST_CASE("closed-form spectrum ordering and ground state") {
  const LandauParams p = natural(1.0, 2.0, 0.0);
  const DerivedFrequencies f = derive_frequencies(p);
  const auto levels = spectrum_closed_form(p, f, 6);
  REQUIRE(levels.size() == 6);
  CHECK(levels[0] ==
        doctest::Approx((f.Omega_plus + f.Omega_minus) / 2.0).epsilon(1e-14));
  CHECK(std::is_sorted(levels.begin(), levels.end()));
  CHECK_THROWS_AS(spectrum_closed_form(p, f, 0), DomainError);
}

TEST_CASE("quadratic Hamiltonian converges under truncation doubling") {
  const LandauParams p = natural(1.0, 2.0, 0.0);
  const CompositeSpace sp = make_space({ModeSpec{12, 3}, ModeSpec{12, 3}});
  auto builder = [p](const CompositeSpace& s) {
    return build_canonical_operators(p, s).H_theta;
  };
  const ConvergenceReport rep = spectrum_numerical(builder, 6, sp);
  CHECK(rep.converged);
  CHECK(rep.max_rel_drift < 1e-8);
  const DerivedFrequencies f = derive_frequencies(p);
  const auto closed = spectrum_closed_form(p, f, 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(rep.levels[i] == doctest::Approx(closed[i]).epsilon(1e-8));
  }
  CHECK_THROWS_AS(spectrum_numerical(builder, 10000, sp), DomainError);
}

TEST_CASE("paper-literal theorem 1 coefficients transcribe the formulas") {
  const LandauParams p = natural(1.0, 2.0, 0.0);
  const DerivedFrequencies f = derive_frequencies(p);
  const CompositeSpace sp = make_space({ModeSpec{8, 2}, ModeSpec{8, 2}});
  const OperatorSet ops = build_canonical_operators(p, sp);
  const TheoremOneOperators t = theorem1_operators(p, f, ops);
  const double wp = f.Omega_plus, wm = f.Omega_minus, xi2 = f.xi * f.xi;
  CHECK(t.y_c1 == doctest::Approx(0.5 / wm - 0.5 / wp).epsilon(1e-14));
  CHECK(t.y_c2 == doctest::Approx(-(1.0 / (xi2 * wp) + 1.0 / (xi2 * wm)))
                      .epsilon(1e-14));
  CHECK(t.py_c1 ==
        doctest::Approx(xi2 / (4 * wp) + xi2 / (4 * wm)).epsilon(1e-14));
  CHECK((t.y_L - 4.0 * ops.H_theta).norm() == 0.0);
  CHECK((t.pxL - t.y_L).norm() == 0.0);
}

TEST_CASE("chiral calibration reproduces the printed y_R coefficients") {
  const LandauParams p = natural(1.0, 2.0, 0.0);
  const DerivedFrequencies f = derive_frequencies(p);
  const CompositeSpace sp = make_space({ModeSpec{12, 3}, ModeSpec{12, 3}});
  const OperatorSet ops = build_paper_chiral_operators(p, f, sp);
  const TheoremOneOperators cal = calibrate_theorem1(p, f, ops);
  CHECK(cal.fit_residual < 1e-10);
  CHECK(cal.y_c1 == doctest::Approx(cal.paper_y_c1).epsilon(1e-10));
  CHECK(cal.y_c2 == doctest::Approx(cal.paper_y_c2).epsilon(1e-10));
}

TEST_CASE("calibrated canonical generators satisfy the associator relations") {
  const LandauParams p = natural(1.0, 2.0, 0.1);
  const DerivedFrequencies f = derive_frequencies(p);
  const CompositeSpace sp = make_space({ModeSpec{20, 6}, ModeSpec{20, 6}});
  const OperatorSet ops = build_canonical_operators(p, sp);
  const TheoremOneOperators cal = calibrate_theorem1(p, f, ops);
  CHECK(cal.fit_residual < 1e-8);
  const auto relations = verify_associator_relations(p, cal, ops);
  REQUIRE(relations.size() == 3);
  for (const auto& r : relations) {
    CHECK(r.residual_direct < 1e-8);
    CHECK(r.residual_eq7 < 1e-8);
    CHECK(r.route_agreement < 1e-12);
  }
}
