#include "ncl/landau.hpp"

#include "ncl/jordan.hpp"

#include <algorithm>
#include <cmath>

namespace ncl {

namespace {

double xi_denominator(const LandauParams& p) {
  return 1.0 - (p.m * p.omega_L * p.theta / 2.0) +
         (p.m * p.m * p.omega * p.omega * p.theta * p.theta / 16.0) +
         (p.m * p.m * p.omega_L * p.omega_L * p.theta * p.theta / 64.0);
}

double omega_radicand(const LandauParams& p) {
  const double w2 = p.omega * p.omega;
  const double wl = p.omega_L;
  const double mt = p.m * p.theta;
  return w2 + wl * wl / 4.0 - p.m * wl * w2 * p.theta / 2.0 -
         p.m * wl * wl * wl * p.theta / 8.0 +
         (w2 + wl * wl / 4.0) *
             ((mt * p.omega / 4.0) * (mt * p.omega / 4.0) +
              (mt * wl / 8.0) * (mt * wl / 8.0));
}

}  // namespace

void LandauParams::validate() const {
  if (m <= 0.0) throw DomainError("LandauParams: m must be > 0");
  if (hbar <= 0.0) throw DomainError("LandauParams: hbar must be > 0");
  if (omega < 0.0 || omega_L < 0.0) {
    throw DomainError("LandauParams: frequencies must be >= 0");
  }
  if (omega == 0.0 && omega_L == 0.0) {
    throw DomainError("LandauParams: omega and omega_L both zero");
  }
  if (xi_denominator(*this) <= 0.0) {
    throw DomainError("LandauParams: xi denominator "
                      "1 - m wL th/2 + m^2 w^2 th^2/16 + m^2 wL^2 th^2/64 "
                      "is not positive");
  }
  if (omega_radicand(*this) < 0.0) {
    throw DomainError("LandauParams: expression under the Omega square root "
                      "is negative");
  }
}

double theta_landau_limit(double hbar, double e, double B, double c) {
  if (e == 0.0 || B == 0.0) {
    throw DomainError("theta_landau_limit: e and B must be nonzero");
  }
  return -hbar * c / (e * B);
}

DerivedFrequencies derive_frequencies(const LandauParams& p) {
  p.validate();
  DerivedFrequencies f{};
  const double num = p.m * p.m * p.omega * p.omega / (p.hbar * p.hbar) +
                     p.m * p.m * p.omega_L * p.omega_L / (4.0 * p.hbar * p.hbar);
  f.xi = std::pow(num / xi_denominator(p), 0.25);
  f.Omega = std::sqrt(omega_radicand(p));
  // expanded form of wL (1 - (wL/4 + w^2/wL) m th); finite at wL = 0
  f.omega_L_tilde =
      p.omega_L - (p.omega_L * p.omega_L / 4.0 + p.omega * p.omega) * p.m *
                      p.theta;
  f.Omega_plus = f.Omega + f.omega_L_tilde / 2.0;
  f.Omega_minus = f.Omega - f.omega_L_tilde / 2.0;
  return f;
}

const char* to_string(Representation r) {
  switch (r) {
    case Representation::CanonicalBopp:
      return "canonical-bopp";
    case Representation::PaperChiral:
      return "paper-chiral";
  }
  return "?";
}

namespace {

void require_two_modes(const CompositeSpace& space, const char* where) {
  if (space.modes.size() != 2) {
    throw DomainError(std::string(where) + ": space must have exactly 2 modes");
  }
}

}  // namespace

OperatorSet build_canonical_operators(const LandauParams& p,
                                      const CompositeSpace& space) {
  require_two_modes(space, "build_canonical_operators");
  const DerivedFrequencies f = derive_frequencies(p);
  const double xi = f.xi;

  OperatorSet ops;
  ops.representation = Representation::CanonicalBopp;
  ops.space = space;

  // standard quadratures with length scale 1/xi per mode
  auto quad_x = [&](const ModeSpec& m) {
    const Matrix a = annihilation(m);
    return Matrix((a + a.adjoint()) / (std::sqrt(2.0) * xi));
  };
  auto quad_p = [&](const ModeSpec& m) {
    const Matrix a = annihilation(m);
    return Matrix(Complex(0.0, 1.0) * xi * p.hbar * (a.adjoint() - a) /
                  std::sqrt(2.0));
  };

  const Matrix xt = embed(quad_x(space.modes[0]), 0, space);
  const Matrix pxt = embed(quad_p(space.modes[0]), 0, space);
  const Matrix yt = embed(quad_x(space.modes[1]), 1, space);
  const Matrix pyt = embed(quad_p(space.modes[1]), 1, space);

  // Bopp shift
  const double s = p.theta / (2.0 * p.hbar);
  ops.x = xt - s * pyt;
  ops.y = yt + s * pxt;
  ops.p_x = pxt;
  ops.p_y = pyt;

  const Complex i(0.0, 1.0);
  ops.z = (ops.x + i * ops.y) / std::sqrt(2.0);
  ops.z_bar = (ops.x - i * ops.y) / std::sqrt(2.0);
  ops.p_z = (ops.p_x - i * ops.p_y) / std::sqrt(2.0);
  ops.p_zbar = (ops.p_x + i * ops.p_y) / std::sqrt(2.0);

  ops.A_plus = xi * ops.z_bar / 2.0 + i * ops.p_z / (xi * p.hbar);
  ops.A_minus = xi * ops.z / 2.0 + i * ops.p_zbar / (xi * p.hbar);

  ops.H_theta = build_hamiltonian_quadratic(p, ops);
  return ops;
}

OperatorSet build_paper_chiral_operators(const LandauParams& p,
                                         const DerivedFrequencies& freqs,
                                         const CompositeSpace& space) {
  require_two_modes(space, "build_paper_chiral_operators");
  if (!(freqs.xi > 0.0) || !std::isfinite(freqs.xi)) {
    throw DomainError("build_paper_chiral_operators: invalid xi");
  }
  const double xi = freqs.xi;

  OperatorSet ops;
  ops.representation = Representation::PaperChiral;
  ops.space = space;

  ops.A_plus = embed(annihilation(space.modes[0]), 0, space);
  ops.A_minus = embed(annihilation(space.modes[1]), 1, space);
  const Matrix Apd = ops.A_plus.adjoint();
  const Matrix Amd = ops.A_minus.adjoint();

  const Complex i(0.0, 1.0);
  ops.x = (ops.A_minus + ops.A_plus + Apd + Amd) / (std::sqrt(2.0) * xi);
  ops.y = i * (-ops.A_minus + ops.A_plus - Apd + Amd) / (std::sqrt(2.0) * xi);
  ops.p_x = i * xi * p.hbar * (-ops.A_minus - ops.A_plus + Apd + Amd) /
            (2.0 * std::sqrt(2.0));
  ops.p_y = xi * p.hbar * (-ops.A_minus + ops.A_plus + Apd - Amd) /
            (2.0 * std::sqrt(2.0));

  // invert the ladder definitions for the complex coordinates
  ops.z_bar = (ops.A_plus + Amd) / xi;
  ops.z = (ops.A_minus + Apd) / xi;
  ops.p_z = -i * xi * p.hbar * (ops.A_plus - Amd) / 2.0;
  ops.p_zbar = -i * xi * p.hbar * (ops.A_minus - Apd) / 2.0;

  ops.H_theta = build_hamiltonian_chiral(p, freqs, space);
  return ops;
}

Matrix build_hamiltonian_quadratic(const LandauParams& p,
                                   const OperatorSet& ops) {
  const double k = p.m * p.omega_L / 2.0;
  const Matrix pi_x = ops.p_x + k * ops.y;
  const Matrix pi_y = ops.p_y - k * ops.x;
  return pi_x * pi_x / (2.0 * p.m) + pi_y * pi_y / (2.0 * p.m) +
         (p.m * p.omega * p.omega / 2.0) * (ops.x * ops.x + ops.y * ops.y);
}

Matrix build_hamiltonian_chiral(const LandauParams& p,
                                const DerivedFrequencies& freqs,
                                const CompositeSpace& space) {
  require_two_modes(space, "build_hamiltonian_chiral");
  const Matrix np = embed(number_operator(space.modes[0]), 0, space);
  const Matrix nm = embed(number_operator(space.modes[1]), 1, space);
  const Matrix id = Matrix::Identity(space.dim, space.dim);
  return p.hbar * freqs.Omega_plus * (np + 0.5 * id) +
         p.hbar * freqs.Omega_minus * (nm + 0.5 * id);
}

std::vector<double> spectrum_closed_form(const LandauParams& p,
                                         const DerivedFrequencies& freqs,
                                         int k) {
  if (k < 1) throw DomainError("spectrum_closed_form: K must be >= 1");
  std::vector<double> levels;
  levels.reserve((k + 1) * (k + 1));
  for (int np = 0; np <= k; ++np) {
    for (int nm = 0; nm <= k; ++nm) {
      levels.push_back(p.hbar * freqs.Omega_plus * (np + 0.5) +
                       p.hbar * freqs.Omega_minus * (nm + 0.5));
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.resize(k);
  return levels;
}

ConvergenceReport spectrum_numerical(
    const std::function<Matrix(const CompositeSpace&)>& builder, int k,
    const CompositeSpace& space, double drift_tol) {
  int safe_dim = 1;
  for (const auto& m : space.modes) safe_dim *= m.n_trunc - m.safe_margin;
  if (k < 1 || k > safe_dim / 2) {
    throw DomainError("spectrum_numerical: K outside the safe subspace");
  }

  auto lowest = [&](const CompositeSpace& sp) {
    const RealVector w = eigh_values(builder(sp));
    return std::vector<double>(w.data(), w.data() + k);
  };

  ConvergenceReport rep;
  rep.levels = lowest(space);

  CompositeSpace doubled = space;
  for (auto& m : doubled.modes) m.n_trunc *= 2;
  doubled.dim = 1;
  for (const auto& m : doubled.modes) doubled.dim *= m.n_trunc;
  rep.levels_doubled = lowest(doubled);

  rep.max_rel_drift = 0.0;
  for (int i = 0; i < k; ++i) {
    const double scale = std::max(1.0, std::abs(rep.levels_doubled[i]));
    rep.max_rel_drift =
        std::max(rep.max_rel_drift,
                 std::abs(rep.levels[i] - rep.levels_doubled[i]) / scale);
  }
  rep.converged = rep.max_rel_drift <= drift_tol;
  return rep;
}

namespace {

struct PaperCoefficients {
  double y_c1, y_c2, px_c1, px_c2, py_c1, py_c2;
};

PaperCoefficients paper_coefficients(const LandauParams& p,
                                     const DerivedFrequencies& f) {
  if (f.Omega_plus == 0.0 || f.Omega_minus == 0.0) {
    throw DomainError("theorem1: Omega_plus or Omega_minus is zero");
  }
  const double xi2 = f.xi * f.xi;
  PaperCoefficients c{};
  c.y_c1 = 1.0 / (2.0 * p.hbar * f.Omega_minus) -
           1.0 / (2.0 * p.hbar * f.Omega_plus);
  c.y_c2 = -(1.0 / (xi2 * p.hbar * p.hbar * f.Omega_plus) +
             1.0 / (xi2 * p.hbar * p.hbar * f.Omega_minus));
  c.px_c1 = xi2 / (4.0 * f.Omega_plus) + xi2 / (4.0 * f.Omega_minus);
  // second term as printed: 1/(2 hbar^2 Omega_-), dimensionally odd
  c.px_c2 = 1.0 / (2.0 * p.hbar * f.Omega_plus) -
            1.0 / (2.0 * p.hbar * p.hbar * f.Omega_minus);
  c.py_c1 = xi2 * p.hbar / (4.0 * f.Omega_plus) +
            xi2 * p.hbar / (4.0 * f.Omega_minus);
  c.py_c2 = 1.0 / (2.0 * f.Omega_minus) - 1.0 / (2.0 * f.Omega_plus);
  return c;
}

void assemble(TheoremOneOperators& t, const OperatorSet& ops) {
  const Matrix h4 = 4.0 * ops.H_theta;
  t.y_L = h4;
  t.pxL = h4;
  t.pyL = h4;
  t.y_R = t.y_c1 * ops.x + t.y_c2 * ops.p_y;
  t.pxR = t.px_c1 * ops.x + t.px_c2 * ops.p_y;
  t.pyR = t.py_c1 * ops.y + t.py_c2 * ops.p_x;
}

}  // namespace

TheoremOneOperators theorem1_operators(const LandauParams& p,
                                       const DerivedFrequencies& freqs,
                                       const OperatorSet& ops) {
  const PaperCoefficients c = paper_coefficients(p, freqs);
  TheoremOneOperators t{};
  t.source = CoefficientSource::PaperLiteral;
  t.y_c1 = t.paper_y_c1 = c.y_c1;
  t.y_c2 = t.paper_y_c2 = c.y_c2;
  t.px_c1 = t.paper_px_c1 = c.px_c1;
  t.px_c2 = t.paper_px_c2 = c.px_c2;
  t.py_c1 = t.paper_py_c1 = c.py_c1;
  t.py_c2 = t.paper_py_c2 = c.py_c2;
  assemble(t, ops);
  return t;
}

TheoremOneOperators calibrate_theorem1(const LandauParams& p,
                                       const DerivedFrequencies& freqs,
                                       const OperatorSet& ops) {
  const PaperCoefficients paper = paper_coefficients(p, freqs);
  const Matrix proj = safe_projector(ops.space);
  const Complex i(0.0, 1.0);

  auto fit = [&](const Matrix& g1, const Matrix& g2, const Matrix& target,
                 double& c1, double& c2) {
    const Matrix m1 = proj * (i * commutator(ops.H_theta, g1)) * proj;
    const Matrix m2 = proj * (i * commutator(ops.H_theta, g2)) * proj;
    const Matrix b = proj * target * proj;
    const double g11 = std::real(hs_inner(m1, m1));
    const double g12 = std::real(hs_inner(m1, m2));
    const double g22 = std::real(hs_inner(m2, m2));
    const double det = g11 * g22 - g12 * g12;
    if (det <= 1e-12 * std::max(1e-300, g11 * g22)) {
      throw DomainError("calibrate_theorem1: singular fit (degenerate "
                        "generator pair)");
    }
    const double b1 = std::real(hs_inner(m1, b));
    const double b2 = std::real(hs_inner(m2, b));
    c1 = (g22 * b1 - g12 * b2) / det;
    c2 = (g11 * b2 - g12 * b1) / det;
    const Matrix fitres = c1 * m1 + c2 * m2 - b;
    return hs_norm(fitres) / std::max(1e-300, hs_norm(b));
  };

  TheoremOneOperators t{};
  t.source = CoefficientSource::Calibrated;
  t.paper_y_c1 = paper.y_c1;
  t.paper_y_c2 = paper.y_c2;
  t.paper_px_c1 = paper.px_c1;
  t.paper_px_c2 = paper.px_c2;
  t.paper_py_c1 = paper.py_c1;
  t.paper_py_c2 = paper.py_c2;

  double r1 = fit(ops.x, ops.p_y, ops.y, t.y_c1, t.y_c2);
  double r2 = fit(ops.x, ops.p_y, ops.p_x, t.px_c1, t.px_c2);
  double r3 = fit(ops.y, ops.p_x, ops.p_y, t.py_c1, t.py_c2);
  t.fit_residual = std::max({r1, r2, r3});
  assemble(t, ops);
  return t;
}

std::vector<AssociatorRelationResult> verify_associator_relations(
    const LandauParams& p, const TheoremOneOperators& thm1,
    const OperatorSet& ops) {
  const Matrix proj = safe_projector(ops.space);
  const Matrix id = Matrix::Identity(ops.space.dim, ops.space.dim);

  auto evaluate = [&](const char* name, const Matrix& left, const Matrix& mid,
                      const Matrix& right, double target) {
    const Matrix direct = associator(left, mid, right) - target * id;
    const Matrix eq7 =
        associator_via_double_commutator(left, mid, right) - target * id;
    const double scale = std::max(1.0, std::abs(target));
    AssociatorRelationResult r;
    r.relation = name;
    r.residual_direct = spectral_norm(proj * direct * proj) / scale;
    r.residual_eq7 = spectral_norm(proj * eq7 * proj) / scale;
    r.route_agreement = spectral_norm(direct - eq7) /
                        std::max(1.0, spectral_norm(left) *
                                          spectral_norm(mid) *
                                          spectral_norm(right));
    return r;
  };

  std::vector<AssociatorRelationResult> out;
  out.push_back(evaluate("y", thm1.y_L, ops.x, thm1.y_R, p.theta));
  out.push_back(evaluate("px", thm1.pxL, ops.x, thm1.pxR, p.hbar));
  out.push_back(evaluate("py", thm1.pyL, ops.y, thm1.pyR, p.hbar));
  return out;
}

}  // namespace ncl
