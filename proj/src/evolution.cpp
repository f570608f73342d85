#include "ncl/evolution.hpp"

#include "ncl/jordan.hpp"

#include <algorithm>
#include <cmath>

namespace ncl {

ChiralQuadratures chiral_quadratures(const LandauParams& p, double Omega,
                                     const ModeSpec& mode) {
  if (!(Omega > 0.0)) {
    throw DomainError("chiral_quadratures: Omega must be > 0 "
                      "(C1 = sqrt(hbar/2m Omega) diverges)");
  }
  mode.validate();
  ChiralQuadratures q;
  q.mode = mode;
  q.Omega = Omega;
  q.C1 = std::sqrt(p.hbar / (2.0 * p.m * Omega));
  q.C2 = std::sqrt(p.hbar * p.m * Omega / 2.0);
  q.A = annihilation(mode);
  const Matrix ad = q.A.adjoint();
  q.X = q.C1 * (ad + q.A);
  q.P = Complex(0.0, 1.0) * q.C2 * (ad - q.A);
  return q;
}

namespace {

GeneratorSet build_generators(const LandauParams& p, double Omega,
                              const ModeSpec& mode, bool calibrated) {
  const ChiralQuadratures q = chiral_quadratures(p, Omega, mode);
  const Matrix ad = q.A.adjoint();

  GeneratorSet g;
  g.Omega = Omega;
  g.C1 = q.C1;
  g.calibrated = calibrated;
  g.paper_s2_factor = 2.0 * q.C1;
  g.s2_rescale = calibrated ? 1.0 : 2.0 * q.C1;

  g.R1 = -(Omega / 4.0) * (q.X * q.A + ad * q.X);
  g.S1 = q.P * q.A + ad * q.P;
  g.R2 = -(Omega / 4.0) * 2.0 * q.C1 * (q.P * q.A + ad * q.P);
  g.S2 = g.s2_rescale * (ad * q.A);

  const Matrix n = number_operator(mode);
  const Matrix id = Matrix::Identity(mode.n_trunc, mode.n_trunc);
  g.H = p.hbar * Omega * (n + 0.5 * id);

  const Complex i(0.0, 1.0);
  const Matrix sum = i * commutator(g.R1, g.S1) + i * commutator(g.R2, g.S2);
  const CompositeSpace single = make_space({mode});
  g.decomposition_residual = assert_on_safe(g.H, sum, single);
  return g;
}

EvolutionGenerator build_pair(const LandauParams& p,
                              const DerivedFrequencies& freqs,
                              const ModeSpec& mode, bool calibrated) {
  EvolutionGenerator gen;
  gen.hbar = p.hbar;
  gen.plus = build_generators(p, freqs.Omega_plus, mode, calibrated);
  if (freqs.Omega_minus > 0.0) {
    gen.minus = build_generators(p, freqs.Omega_minus, mode, calibrated);
  }
  return gen;
}

}  // namespace

EvolutionGenerator theorem4_generators(const LandauParams& p,
                                       const DerivedFrequencies& freqs,
                                       const ModeSpec& mode) {
  return build_pair(p, freqs, mode, false);
}

EvolutionGenerator calibrated_generators(const LandauParams& p,
                                         const DerivedFrequencies& freqs,
                                         const ModeSpec& mode) {
  return build_pair(p, freqs, mode, true);
}

DensityMatrix evolve_von_neumann(const DensityMatrix& rho0, const Matrix& h,
                                 double t, double hbar) {
  require_same_dim(rho0.mat(), h, "evolve_von_neumann");
  const Matrix u = expm_i_selfadjoint(h, -t / hbar);
  return make_density(u * rho0.mat() * u.adjoint());
}

namespace {

Matrix jordan_rhs(const Matrix& v, const GeneratorSet& gen, double hbar) {
  return (-4.0 / hbar) * (left_commutator_apply(gen.S1, gen.R1, v) +
                          left_commutator_apply(gen.S2, gen.R2, v));
}

Matrix rk4_integrate(const Matrix& v0, const GeneratorSet& gen, double hbar,
                     double t, double step) {
  if (!(step > 0.0)) throw DomainError("evolve_jordan_state: step must be > 0");
  Matrix v = v0;
  double remaining = std::abs(t);
  const double sign = t < 0.0 ? -1.0 : 1.0;
  while (remaining > 0.0) {
    const double h = sign * std::min(step, remaining);
    const Matrix k1 = jordan_rhs(v, gen, hbar);
    const Matrix k2 = jordan_rhs(v + (h / 2.0) * k1, gen, hbar);
    const Matrix k3 = jordan_rhs(v + (h / 2.0) * k2, gen, hbar);
    const Matrix k4 = jordan_rhs(v + h * k3, gen, hbar);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    remaining -= std::abs(h);
  }
  return v;
}

}  // namespace

Matrix evolve_jordan_state(const Matrix& v0, const GeneratorSet& gen,
                           double hbar, double t, EvolutionMethod method,
                           double step, double decomp_tol) {
  require_same_dim(v0, gen.H, "evolve_jordan_state");
  if (gen.decomposition_residual > decomp_tol) {
    throw DomainError(
        "evolve_jordan_state: generator decomposition residual " +
        std::to_string(gen.decomposition_residual) +
        " exceeds tolerance; the flow would not correspond to H");
  }
  if (method == EvolutionMethod::ClosedForm) {
    const Matrix u = expm_i_selfadjoint(gen.H, -t / hbar);
    return u * v0 * u.adjoint();
  }
  return rk4_integrate(v0, gen, hbar, t, step);
}

std::pair<Matrix, Matrix> evolve_product_state(const Matrix& v_plus,
                                               const Matrix& v_minus,
                                               const EvolutionGenerator& gen,
                                               double t, EvolutionMethod method,
                                               double step) {
  if (!gen.plus) {
    throw DomainError("evolve_product_state: missing plus-chirality generators");
  }
  Matrix vp = evolve_jordan_state(v_plus, *gen.plus, gen.hbar, t, method, step);
  // a vanishing chirality frequency means a trivial factor evolution
  Matrix vm = gen.minus ? evolve_jordan_state(v_minus, *gen.minus, gen.hbar, t,
                                              method, step)
                        : v_minus;
  return {std::move(vp), std::move(vm)};
}

AuditResult jordan_vs_von_neumann_audit(const Matrix& b0,
                                        const GeneratorSet& gen, double hbar,
                                        const std::vector<double>& t_grid,
                                        double tol, double step) {
  const double herm0 =
      (b0 - b0.adjoint()).norm() / std::max(1e-300, b0.norm());
  if (herm0 > 1e-12) throw NotSelfAdjoint(herm0);
  const double n0 = std::real((b0 * b0).trace());
  if (!(n0 > 0.0)) throw DomainError("audit: zero state vector");
  const Matrix b = b0 / std::sqrt(n0);
  const DensityMatrix rho0 = make_density(b * b);
  const double e0 = expectation(rho0, gen.H);
  const double tr0 = std::real(b.trace());

  AuditResult res;
  res.max_state_residual = 0.0;
  for (double t : t_grid) {
    const Matrix vt =
        evolve_jordan_state(b, gen, hbar, t, EvolutionMethod::Rk4, step);
    const DensityMatrix rhot = evolve_von_neumann(rho0, gen.H, t, hbar);
    AuditPoint pt;
    pt.t = t;
    pt.state_residual = (vt * vt - rhot.mat()).norm();
    pt.trace_defect = std::abs(std::real(vt.trace()) - tr0);
    pt.hermiticity_defect = (vt - vt.adjoint()).norm();
    pt.energy_drift = std::abs(expectation(rhot, gen.H) - e0);
    res.max_state_residual = std::max(res.max_state_residual,
                                      pt.state_residual);
    res.points.push_back(pt);
  }

  // chain rule rho_dot = 2 B . B_dot by central differences at the
  // midpoint of the grid, with the closed-form flow as reference
  const double tc = t_grid.empty() ? 0.0 : t_grid[t_grid.size() / 2];
  const double h = 1e-6;
  auto closed = [&](double t) {
    return evolve_jordan_state(b, gen, hbar, t, EvolutionMethod::ClosedForm);
  };
  const Matrix vm = closed(tc - h);
  const Matrix vc = closed(tc);
  const Matrix vp = closed(tc + h);
  const Matrix rho_dot = (vp * vp - vm * vm) / (2.0 * h);
  const Matrix b_dot = (vp - vm) / (2.0 * h);
  res.derivative_residual =
      (rho_dot - 2.0 * jordan_product(vc, b_dot)).norm();

  bool ok = res.max_state_residual <= tol && res.derivative_residual <= tol;
  for (const auto& pt : res.points) {
    ok = ok && pt.trace_defect <= tol && pt.hermiticity_defect <= tol &&
         pt.energy_drift <= tol;
  }
  res.passed = ok;
  return res;
}

}  // namespace ncl
