#include "ncl/claims.hpp"

#include "ncl/evolution.hpp"
#include "ncl/jordan.hpp"
#include "ncl/rng.hpp"
#include "ncl/states.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

namespace ncl {

using ordered_json = nlohmann::ordered_json;

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "pass";
    case ClaimStatus::Fail:
      return "fail";
    case ClaimStatus::DocumentedDiscrepancy:
      return "documented-discrepancy";
    case ClaimStatus::Skipped:
      return "skipped";
  }
  return "?";
}

double RunConfig::tolerance_for(const std::string& claim_class) const {
  auto it = tolerances.find(claim_class);
  if (it != tolerances.end()) return it->second;
  it = tolerances.find("default");
  if (it != tolerances.end()) return it->second;
  return 1e-10;
}

RunConfig default_config() {
  RunConfig cfg;
  cfg.points = {LandauParams{}};
  cfg.truncation = ModeSpec{};
  cfg.tolerances = {
      {"algebra", 1e-12},     {"basis", 1e-13},      {"commutator", 1e-10},
      {"associator", 1e-8},   {"spectrum", 1e-6},    {"convergence", 1e-8},
      {"coefficients", 1e-10}, {"decomposition", 1e-10},
      {"evolution", 1e-8},    {"states", 1e-13},     {"default", 1e-10},
  };
  cfg.seed = 12345;
  cfg.units = "natural";
  return cfg;
}

namespace {

LandauParams params_from_json(const ordered_json& j) {
  LandauParams p;
  p.m = j.value("m", 1.0);
  p.omega = j.value("omega", 1.0);
  p.omega_L = j.value("omega_L", 2.0);
  p.theta = j.value("theta", 0.1);
  p.hbar = j.value("hbar", 1.0);
  return p;
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  ordered_json j;
  try {
    j = ordered_json::parse(buf.str(), nullptr, true, /*ignore_comments=*/true);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }

  RunConfig cfg = default_config();
  try {
    if (j.contains("units")) cfg.units = j.at("units").get<std::string>();
    if (cfg.units != "natural" && cfg.units != "SI-like") {
      throw ConfigError("config: units must be \"natural\" or \"SI-like\"");
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("points")) {
      cfg.points.clear();
      for (const auto& pt : j.at("points")) {
        cfg.points.push_back(params_from_json(pt));
      }
      if (cfg.points.empty()) throw ConfigError("config: empty points list");
    }
    if (j.contains("truncation")) {
      const auto& t = j.at("truncation");
      cfg.truncation.n_trunc = t.value("n_trunc", 24);
      cfg.truncation.safe_margin = t.value("safe_margin", 6);
    }
    if (j.contains("tolerances")) {
      for (auto& [k, v] : j.at("tolerances").items()) {
        cfg.tolerances[k] = v.get<double>();
      }
    }
    if (j.contains("checks")) {
      cfg.checks = j.at("checks").get<std::vector<std::string>>();
    }
    if (j.contains("output")) cfg.output_path = j.at("output").get<std::string>();
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }

  try {
    cfg.truncation.validate();
    for (const auto& p : cfg.points) p.validate();
  } catch (const Error& e) {
    throw ConfigError(std::string("config validation: ") + e.what());
  }

  const auto catalog = claim_catalog();
  for (const auto& id : cfg.checks) {
    if (std::find(catalog.begin(), catalog.end(), id) == catalog.end()) {
      throw ConfigError("unknown claim id: " + id);
    }
  }
  return cfg;
}

std::string config_to_json(const RunConfig& cfg) {
  ordered_json j;
  j["units"] = cfg.units;
  j["seed"] = cfg.seed;
  j["points"] = ordered_json::array();
  for (const auto& p : cfg.points) {
    j["points"].push_back({{"m", p.m},
                           {"omega", p.omega},
                           {"omega_L", p.omega_L},
                           {"theta", p.theta},
                           {"hbar", p.hbar}});
  }
  j["truncation"] = {{"n_trunc", cfg.truncation.n_trunc},
                     {"safe_margin", cfg.truncation.safe_margin}};
  j["tolerances"] = cfg.tolerances;
  j["checks"] = cfg.checks;
  j["output"] = cfg.output_path;
  return j.dump(2);
}

namespace {

// Per-point evaluation context; heavyweight artifacts built once.
struct Ctx {
  const RunConfig* cfg;
  LandauParams p;
  DerivedFrequencies freqs;
  CompositeSpace space;
  Matrix proj;
  OperatorSet can;
  OperatorSet chi;
  TheoremOneOperators cal_can;
  std::vector<AssociatorRelationResult> assoc;
  EvolutionGenerator gen_cal;
  EvolutionGenerator gen_paper;
};

struct EvalOut {
  double residual = 0.0;
  std::string representation = "matrix";
  std::string notes;
};

struct ClaimDef {
  const char* id;
  const char* claim_class;
  const char* anchor;
  bool discrepancy_eligible;
  std::function<EvalOut(Ctx&, Rng&)> eval;
};

double comm_residual(const Ctx& c, const Matrix& a, const Matrix& b,
                     double target) {
  const Matrix id = Matrix::Identity(c.space.dim, c.space.dim);
  const Matrix delta =
      commutator(a, b) - Complex(0.0, 1.0) * target * id;
  return spectral_norm(c.proj * delta * c.proj) / std::max(1.0, std::abs(target));
}

double rel_delta(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

Matrix random_projector(Rng& rng, int n) {
  const Matrix u = rng.unitary_matrix(n);
  Matrix p = Matrix::Zero(n, n);
  p(0, 0) = 1.0;
  return u * p * u.adjoint();
}

std::vector<ClaimDef> make_catalog() {
  std::vector<ClaimDef> defs;

  defs.push_back({"jb.commutativity", "algebra",
                  "§1, \"A∙B = ½(AB+BA)\"", false,
                  [](Ctx&, Rng& rng) {
                    double worst = 0.0;
                    for (int dim : {2, 4, 8}) {
                      for (int k = 0; k < 40; ++k) {
                        const Matrix a = rng.hermitian_matrix(dim);
                        const Matrix b = rng.hermitian_matrix(dim);
                        const double scale = std::max(
                            1e-300, spectral_norm(a) * spectral_norm(b));
                        worst = std::max(
                            worst, (jordan_product(a, b) - jordan_product(b, a))
                                           .norm() /
                                       scale);
                      }
                    }
                    return EvalOut{worst, "matrix", ""};
                  }});

  defs.push_back({"jb.jordan-identity", "algebra",
                  "§1, \"(A∙B)∙A² = A∙(B∙A²)\"", false,
                  [](Ctx&, Rng& rng) {
                    double worst = 0.0;
                    for (int dim : {2, 4, 8}) {
                      for (int k = 0; k < 40; ++k) {
                        worst = std::max(
                            worst,
                            jordan_identity_residual(rng.hermitian_matrix(dim),
                                                     rng.hermitian_matrix(dim)));
                      }
                    }
                    return EvalOut{worst, "matrix", ""};
                  }});

  defs.push_back({"jb.norm-csq", "algebra", "§1, \"‖A²‖ = ‖A‖²\"", false,
                  [](Ctx&, Rng& rng) {
                    double worst = 0.0;
                    for (int k = 0; k < 40; ++k) {
                      const auto rep = jb_axiom_report(rng.hermitian_matrix(8),
                                                       rng.hermitian_matrix(8));
                      worst = std::max(worst, rep.csq_residual);
                    }
                    return EvalOut{worst, "matrix", ""};
                  }});

  defs.push_back({"jb.norm-positivity", "algebra",
                  "§1, \"‖A²-B²‖ ≤ max{‖A²‖,‖B²‖}\"", false,
                  [](Ctx&, Rng& rng) {
                    double worst = 0.0;
                    for (int k = 0; k < 40; ++k) {
                      const auto rep = jb_axiom_report(rng.hermitian_matrix(8),
                                                       rng.hermitian_matrix(8));
                      worst = std::max(worst, -rep.positivity_margin);
                    }
                    return EvalOut{std::max(0.0, worst), "matrix", ""};
                  }});

  defs.push_back({"jb.norm-banach", "algebra", "§1, \"‖A∙B‖ ≤ ‖A‖‖B‖\"",
                  false, [](Ctx&, Rng& rng) {
                    double worst = 0.0;
                    for (int k = 0; k < 40; ++k) {
                      const auto rep = jb_axiom_report(rng.hermitian_matrix(8),
                                                       rng.hermitian_matrix(8));
                      worst = std::max(worst, -rep.banach_margin);
                    }
                    return EvalOut{std::max(0.0, worst), "matrix", ""};
                  }});

  defs.push_back({"eq7.equivalence", "algebra",
                  "Eq. (7), \"[A,B,C] = ¼[B,[A,C]]\"", false,
                  [](Ctx&, Rng& rng) {
                    double worst = 0.0;
                    for (int dim : {2, 4, 8, 16}) {
                      for (int k = 0; k < 40; ++k) {
                        const Matrix a = rng.hermitian_matrix(dim);
                        const Matrix b = rng.hermitian_matrix(dim);
                        const Matrix c = rng.hermitian_matrix(dim);
                        const double scale =
                            std::max(1e-300, spectral_norm(a) *
                                                 spectral_norm(b) *
                                                 spectral_norm(c));
                        worst = std::max(
                            worst,
                            (associator(a, b, c) -
                             associator_via_double_commutator(a, b, c))
                                    .norm() /
                                scale);
                      }
                    }
                    return EvalOut{worst, "matrix", ""};
                  }});

  defs.push_back(
      {"eq2.gram-paper", "basis",
       "Eq. (2), \"P_k, X_jk, Y_jk\" spanning set", false,
       [](Ctx&, Rng&) {
         const JordanBasis basis = jordan_basis(4, BasisNormalization::Paper);
         const std::size_t n = basis.elements.size();
         double worst = 0.0;
         for (std::size_t i = 0; i < n; ++i) {
           for (std::size_t j = 0; j < n; ++j) {
             const double g = std::real(trace(
                 jordan_product(basis.elements[i], basis.elements[j])));
             const double want = i != j ? 0.0 : (i < 4 ? 1.0 : 0.5);
             worst = std::max(worst, std::abs(g - want));
           }
         }
         return EvalOut{worst, "matrix",
                        "trace form diag(1,..,1,1/2,..,1/2), not orthonormal"};
       }});

  defs.push_back(
      {"eq2.gram-orthonormal", "basis",
       "Eq. (2) basis, orthonormal rescaling", false, [](Ctx&, Rng&) {
         const JordanBasis basis =
             jordan_basis(4, BasisNormalization::Orthonormal);
         const std::size_t n = basis.elements.size();
         double worst = 0.0;
         for (std::size_t i = 0; i < n; ++i) {
           for (std::size_t j = 0; j < n; ++j) {
             const double g = std::real(trace(
                 jordan_product(basis.elements[i], basis.elements[j])));
             worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
           }
         }
         return EvalOut{worst, "matrix", ""};
       }});

  defs.push_back({"eq2.completeness", "basis",
                  "Eq. (2), \"these elements form a basis\"", false,
                  [](Ctx&, Rng& rng) {
                    double worst = 0.0;
                    for (auto norm : {BasisNormalization::Paper,
                                      BasisNormalization::Orthonormal}) {
                      const JordanBasis basis = jordan_basis(6, norm);
                      for (int k = 0; k < 10; ++k) {
                        const Matrix a = rng.hermitian_matrix(6);
                        const Matrix back = basis.reconstruct(basis.expand(a));
                        worst = std::max(
                            worst, (a - back).norm() /
                                       std::max(1e-300, a.norm()));
                      }
                    }
                    return EvalOut{worst, "matrix", ""};
                  }});

  defs.push_back({"jordan.module-axioms", "algebra",
                  "§1, Jordan module conditions", false,
                  [](Ctx&, Rng& rng) {
                    double worst = 0.0;
                    for (int k = 0; k < 20; ++k) {
                      const auto r = jordan_module_axioms(
                          rng.hermitian_matrix(6), rng.hermitian_matrix(6),
                          rng.hermitian_matrix(6));
                      worst = std::max({worst, r[0], r[1], r[2]});
                    }
                    return EvalOut{worst, "matrix", ""};
                  }});

  defs.push_back({"jordan.representation-axioms", "algebra",
                  "§1, left-multiplication representation", false,
                  [](Ctx&, Rng& rng) {
                    double worst = 0.0;
                    for (int k = 0; k < 20; ++k) {
                      const auto r = representation_axioms(
                          rng.hermitian_matrix(5), rng.hermitian_matrix(5));
                      worst = std::max({worst, r[0], r[1]});
                    }
                    return EvalOut{worst, "matrix", ""};
                  }});

  defs.push_back({"eq4.xy", "commutator", "Eq. (4), \"[x,y] = iθ\"", false,
                  [](Ctx& c, Rng&) {
                    return EvalOut{comm_residual(c, c.can.x, c.can.y, c.p.theta),
                                   to_string(c.can.representation), ""};
                  }});

  defs.push_back({"eq4.xpx", "commutator", "Eq. (4), \"[x,p_x] = iℏ\"", false,
                  [](Ctx& c, Rng&) {
                    return EvalOut{
                        comm_residual(c, c.can.x, c.can.p_x, c.p.hbar),
                        to_string(c.can.representation), ""};
                  }});

  defs.push_back({"eq4.ypy", "commutator", "Eq. (4), \"[y,p_y] = iℏ\"", false,
                  [](Ctx& c, Rng&) {
                    return EvalOut{
                        comm_residual(c, c.can.y, c.can.p_y, c.p.hbar),
                        to_string(c.can.representation), ""};
                  }});

  defs.push_back({"eq4.vanishing", "commutator",
                  "Eq. (4), remaining commutators vanish", false,
                  [](Ctx& c, Rng&) {
                    const double r =
                        std::max({comm_residual(c, c.can.x, c.can.p_y, 0.0),
                                  comm_residual(c, c.can.y, c.can.p_x, 0.0),
                                  comm_residual(c, c.can.p_x, c.can.p_y, 0.0)});
                    return EvalOut{r, to_string(c.can.representation), ""};
                  }});

  defs.push_back(
      {"eq4.xy-chiral", "commutator", "Eq. (4), \"[x,y] = iθ\"", true,
       [](Ctx& c, Rng&) {
         EvalOut out;
         out.residual = comm_residual(c, c.chi.x, c.chi.y, c.p.theta);
         out.representation = to_string(c.chi.representation);
         if (out.residual > 0.0) {
           out.notes = "the inverse ladder formulas give commuting x and y; "
                       "[x,y] = iθ is not realized in this representation";
         }
         return out;
       }});

  defs.push_back(
      {"eq5.spectrum", "spectrum",
       "Eq. (5), \"H_θ = ℏΩ₊(N₊+½) + ℏΩ₋(N₋+½)\"", true,
       [](Ctx& c, Rng&) {
         const int k = 8;
         const RealVector w = eigh_values(c.can.H_theta);
         const std::vector<double> closed =
             spectrum_closed_form(c.p, c.freqs, k);
         double worst = 0.0;
         for (int i = 0; i < k; ++i) {
           worst = std::max(worst, rel_delta(w(i), closed[i]));
         }
         EvalOut out;
         out.residual = worst;
         out.representation = to_string(c.can.representation);
         if (c.p.theta != 0.0) {
           out.notes = "closed form and quadratic Hamiltonian agree only at "
                       "θ=0; at θ≠0 the deltas are informational";
         }
         return out;
       }});

  defs.push_back(
      {"eq5.convergence", "convergence",
       "Eq. (5) spectrum, truncation independence", false,
       [](Ctx& c, Rng&) {
         const LandauParams p = c.p;
         auto builder = [p](const CompositeSpace& sp) {
           return build_canonical_operators(p, sp).H_theta;
         };
         const auto rep = spectrum_numerical(builder, 8, c.space);
         return EvalOut{rep.max_rel_drift, to_string(Representation::CanonicalBopp),
                        rep.converged ? "" : "levels drift under doubling"};
       }});

  defs.push_back({"thm1.assoc-y", "associator",
                  "Eq. (6), \"[y_L, x, y_R] = θ\"", false, [](Ctx& c, Rng&) {
                    return EvalOut{c.assoc[0].residual_direct,
                                   to_string(c.can.representation),
                                   "calibrated coefficients"};
                  }});

  defs.push_back({"thm1.assoc-px", "associator",
                  "Eq. (6), \"[p_{x_L}, x, p_{x_R}] = ℏ\"", false,
                  [](Ctx& c, Rng&) {
                    return EvalOut{c.assoc[1].residual_direct,
                                   to_string(c.can.representation),
                                   "calibrated coefficients"};
                  }});

  defs.push_back({"thm1.assoc-py", "associator",
                  "Eq. (6), \"[p_{y_L}, y, p_{y_R}] = ℏ\"", false,
                  [](Ctx& c, Rng&) {
                    return EvalOut{c.assoc[2].residual_direct,
                                   to_string(c.can.representation),
                                   "calibrated coefficients"};
                  }});

  defs.push_back({"thm1.eq7-route", "algebra",
                  "Eq. (7) applied to the Theorem 1 generators", false,
                  [](Ctx& c, Rng&) {
                    double worst = 0.0;
                    for (const auto& r : c.assoc) {
                      worst = std::max(worst, r.route_agreement);
                    }
                    return EvalOut{worst, to_string(c.can.representation), ""};
                  }});

  defs.push_back({"thm1.generators", "associator",
                  "Theorem 1, \"i[H_θ, G] = target\" fits", false,
                  [](Ctx& c, Rng&) {
                    return EvalOut{c.cal_can.fit_residual,
                                   to_string(c.can.representation),
                                   "least-squares residual on the safe subspace"};
                  }});

  defs.push_back(
      {"thm1.yR-chiral", "coefficients",
       "Theorem 1, printed y_R coefficients", false, [](Ctx& c, Rng&) {
         const TheoremOneOperators cal =
             calibrate_theorem1(c.p, c.freqs, c.chi);
         const double r = std::max(rel_delta(cal.y_c1, cal.paper_y_c1),
                                   rel_delta(cal.y_c2, cal.paper_y_c2));
         return EvalOut{r, to_string(c.chi.representation),
                        "fit against the representation the proof works in"};
       }});

  defs.push_back(
      {"thm1.yR-canonical", "coefficients",
       "Theorem 1, printed y_R coefficients", true, [](Ctx& c, Rng&) {
         const double r =
             std::max(rel_delta(c.cal_can.y_c1, c.cal_can.paper_y_c1),
                      rel_delta(c.cal_can.y_c2, c.cal_can.paper_y_c2));
         EvalOut out;
         out.residual = r;
         out.representation = to_string(c.can.representation);
         if (r > 0.0) {
           out.notes = "the printed coefficients presume the chiral inverse "
                       "formulas, which are not canonical; the canonical fit "
                       "lands elsewhere";
         }
         return out;
       }});

  defs.push_back(
      {"thm1.pxR-hbar", "coefficients",
       "Theorem 1, \"1/(2ℏ²Ω₋)\" in p_{x_R}", true, [](Ctx& c, Rng&) {
         // the hbar-power pattern is invisible in natural units; probe at
         // hbar = 2 in the proof's own representation
         LandauParams probe = c.p;
         probe.hbar = 2.0;
         const DerivedFrequencies f = derive_frequencies(probe);
         const OperatorSet ops =
             build_paper_chiral_operators(probe, f, c.space);
         const TheoremOneOperators cal = calibrate_theorem1(probe, f, ops);
         EvalOut out;
         out.residual = rel_delta(cal.paper_px_c2, cal.px_c2);
         out.representation = to_string(ops.representation);
         out.notes = "evaluated at hbar=2; the printed second coefficient "
                     "carries 1/hbar^2 where the fit requires 1/hbar";
         return out;
       }});

  defs.push_back({"thm4.decomp-plus", "decomposition",
                  "Theorem 4, \"H₊ = i[R₁,S₁] + i[R₂,S₂]\"", false,
                  [](Ctx& c, Rng&) {
                    return EvalOut{c.gen_cal.plus->decomposition_residual,
                                   "chiral-modes", "calibrated S₂"};
                  }});

  defs.push_back(
      {"thm4.decomp-minus", "decomposition",
       "Theorem 4, minus-chirality decomposition", false, [](Ctx& c, Rng&) {
         if (!c.gen_cal.minus) {
           throw DomainError("degenerate chirality: Omega_minus <= 0");
         }
         return EvalOut{c.gen_cal.minus->decomposition_residual,
                        "chiral-modes", "calibrated S₂"};
       }});

  defs.push_back(
      {"thm4.decomp-paper", "decomposition",
       "Theorem 4, decomposition with printed generators", true,
       [](Ctx& c, Rng&) {
         EvalOut out;
         out.residual = c.gen_paper.plus->decomposition_residual;
         out.representation = "chiral-modes";
         if (out.residual > 0.0) {
           out.notes = "printed S₂ = 2C₁A†A leaves an (A†²+A²) remainder "
                       "unless C₁ = 1/2";
         }
         return out;
       }});

  defs.push_back(
      {"thm4.s2-factor", "coefficients",
       "Theorem 4, \"S₂ = 2C₁ A†A\"", true, [](Ctx& c, Rng&) {
         EvalOut out;
         out.residual = std::abs(c.gen_paper.plus->paper_s2_factor - 1.0);
         out.representation = "chiral-modes";
         out.notes = "exact closure requires the factor 1; the printed "
                     "factor is 2C₁";
         return out;
       }});

  defs.push_back({"prop1.commutator-form", "decomposition",
                  "Prop. 1, \"H = iΣ[H_L, H_R]\"", false, [](Ctx& c, Rng&) {
                    // finite truncations force tr(i[L,R]) = 0, so the sum can
                    // only reproduce H away from the corner: compare on the
                    // safe subspace
                    const auto& g = *c.gen_cal.plus;
                    const Complex i(0.0, 1.0);
                    const Matrix sum = i * commutator(g.R1, g.S1) +
                                       i * commutator(g.R2, g.S2);
                    const CompositeSpace single =
                        make_space({c.cfg->truncation});
                    const double r = assert_on_safe(g.H, sum, single);
                    return EvalOut{r, "chiral-modes",
                                   "instantiated by the Theorem 4 pairs"};
                  }});

  defs.push_back(
      {"thm4.evolution-stationary", "evolution",
       "Theorem 4, Jordan–Schrödinger flow fixes eigenstates", false,
       [](Ctx& c, Rng&) {
         const auto& g = *c.gen_cal.plus;
         Matrix v0 = Matrix::Zero(g.H.rows(), g.H.cols());
         v0(1, 1) = 1.0;  // occupation eigenstate projector
         const Matrix vt = evolve_jordan_state(v0, g, c.p.hbar, 1.0,
                                               EvolutionMethod::Rk4, 1e-3);
         return EvalOut{(vt - v0).norm(), "chiral-modes", ""};
       }});

  defs.push_back(
      {"thm4.evolution-audit", "evolution",
       "Theorem 4, \"v̇ = -(4/ℏ)[L_S, L_R]v\"", false, [](Ctx& c, Rng& rng) {
         const auto& g = *c.gen_cal.plus;
         const int n = static_cast<int>(g.H.rows());
         // support kept in the lower half so the flow never reaches the
         // truncation corner
         const Matrix u = rng.unitary_matrix(n / 2);
         Matrix p0 = Matrix::Zero(n / 2, n / 2);
         p0(0, 0) = 1.0;
         Matrix b0 = Matrix::Zero(n, n);
         b0.topLeftCorner(n / 2, n / 2) = u * p0 * u.adjoint();
         const auto audit = jordan_vs_von_neumann_audit(
             b0, g, c.p.hbar, {0.25, 0.5, 1.0}, 1e-8, 5e-4);
         double worst = audit.max_state_residual;
         for (const auto& pt : audit.points) {
           worst = std::max({worst, pt.trace_defect, pt.hermiticity_defect,
                             pt.energy_drift});
         }
         worst = std::max(worst, audit.derivative_residual);
         return EvalOut{worst, "chiral-modes",
                        "RK4 against unitary conjugation, random pure state"};
       }});

  defs.push_back(
      {"thm3.purity-product", "states",
       "Theorem 3, pure ⟺ rank-one factors", false, [](Ctx&, Rng& rng) {
         const CompositeSpace small = make_space({ModeSpec{8, 0}, ModeSpec{8, 0}});
         const DensityMatrix a = make_density(random_projector(rng, 8));
         const DensityMatrix b = make_density(random_projector(rng, 8));
         const auto res = theorem3_check(make_product_state(a, b), small);
         double r = res.factor_reconstruction_residual;
         if (!res.joint_pure || !res.plus_rank_one || !res.minus_rank_one ||
             !res.sign_ambiguity_verified) {
           r = std::max(r, 1.0);
         }
         return EvalOut{r, "chiral-modes", res.notes};
       }});

  defs.push_back(
      {"thm3.purity-mixed", "states",
       "Theorem 3, mixed factor breaks joint purity", false,
       [](Ctx&, Rng& rng) {
         const CompositeSpace small = make_space({ModeSpec{8, 0}, ModeSpec{8, 0}});
         const DensityMatrix pure = make_density(random_projector(rng, 8));
         Matrix mixed_m = 0.5 * random_projector(rng, 8);
         mixed_m += 0.5 * random_projector(rng, 8);
         mixed_m = 0.5 * (mixed_m + Matrix(mixed_m.adjoint()));
         mixed_m /= std::real(mixed_m.trace());
         const DensityMatrix mixed = make_density(mixed_m);
         const auto res = theorem3_check(make_product_state(pure, mixed), small);
         const bool correct = !res.joint_pure && res.plus_rank_one &&
                              !res.minus_rank_one;
         return EvalOut{correct ? 0.0 : 1.0, "chiral-modes", res.notes};
       }});

  defs.push_back(
      {"thm3.sign-ambiguity", "states",
       "Theorem 3, \"determined up to sign\"", false, [](Ctx&, Rng& rng) {
         const Matrix p0 = random_projector(rng, 8);
         const Matrix q0 = random_projector(rng, 8);
         const Matrix flipped = kron(Matrix(-p0), Matrix(-q0));
         return EvalOut{(flipped - kron(p0, q0)).norm(), "chiral-modes", ""};
       }});

  defs.push_back(
      {"states.partial-trace", "states",
       "§3, reduced states of a product", false, [](Ctx&, Rng& rng) {
         const CompositeSpace small = make_space({ModeSpec{6, 0}, ModeSpec{8, 0}});
         Matrix am = rng.hermitian_matrix(6);
         am = am * am;
         am /= std::real(am.trace());
         Matrix bm = rng.hermitian_matrix(8);
         bm = bm * bm;
         bm /= std::real(bm.trace());
         const auto st = make_product_state(make_density(am), make_density(bm));
         const DensityMatrix ra = partial_trace(st.joint, small, Subsystem::Plus);
         const DensityMatrix rb =
             partial_trace(st.joint, small, Subsystem::Minus);
         const double r = std::max((ra.mat() - st.rho_plus.mat()).norm(),
                                   (rb.mat() - st.rho_minus.mat()).norm());
         return EvalOut{r, "chiral-modes", ""};
       }});

  defs.push_back(
      {"states.unitary-orbit", "states",
       "§3, ρ_B invariant under B → BU", false, [](Ctx&, Rng& rng) {
         const Matrix b = rng.complex_matrix(12);
         const DensityMatrix base =
             density_from_vector(b, VectorMode::HilbertSchmidt);
         double worst = 0.0;
         for (int k = 0; k < 10; ++k) {
           const Matrix u = rng.unitary_matrix(12);
           const DensityMatrix moved =
               density_from_vector(b * u, VectorMode::HilbertSchmidt);
           worst = std::max(worst, (moved.mat() - base.mat()).norm());
         }
         return EvalOut{worst, "matrix", ""};
       }});

  return defs;
}

const std::vector<ClaimDef>& catalog_defs() {
  static const std::vector<ClaimDef> defs = make_catalog();
  return defs;
}

Ctx build_context(const RunConfig& cfg, const LandauParams& p) {
  Ctx c;
  c.cfg = &cfg;
  c.p = p;
  c.freqs = derive_frequencies(p);
  c.space = make_space({cfg.truncation, cfg.truncation});
  c.proj = safe_projector(c.space);
  c.can = build_canonical_operators(p, c.space);
  c.chi = build_paper_chiral_operators(p, c.freqs, c.space);
  c.cal_can = calibrate_theorem1(p, c.freqs, c.can);
  c.assoc = verify_associator_relations(p, c.cal_can, c.can);
  c.gen_cal = calibrated_generators(p, c.freqs, cfg.truncation);
  c.gen_paper = theorem4_generators(p, c.freqs, cfg.truncation);
  return c;
}

}  // namespace

std::vector<std::string> claim_catalog() {
  std::vector<std::string> ids;
  for (const auto& d : catalog_defs()) ids.emplace_back(d.id);
  return ids;
}

std::vector<ClaimReport> run_catalog(const RunConfig& cfg) {
  const auto& defs = catalog_defs();
  std::set<std::string> selected(cfg.checks.begin(), cfg.checks.end());
  for (const auto& id : selected) {
    if (std::none_of(defs.begin(), defs.end(),
                     [&](const ClaimDef& d) { return id == d.id; })) {
      throw ConfigError("unknown claim id: " + id);
    }
  }

  std::vector<ClaimReport> reports;
  for (std::size_t pi = 0; pi < cfg.points.size(); ++pi) {
    Ctx ctx = build_context(cfg, cfg.points[pi]);
    for (std::size_t di = 0; di < defs.size(); ++di) {
      const ClaimDef& d = defs[di];
      ClaimReport rep;
      rep.claim_id = d.id;
      rep.paper_anchor = d.anchor;
      rep.tolerance = cfg.tolerance_for(d.claim_class);

      if (!selected.empty() && selected.count(d.id) == 0) {
        rep.representation = "n/a";
        rep.status = ClaimStatus::Skipped;
        rep.notes = "not selected";
        reports.push_back(std::move(rep));
        continue;
      }

      // decoupled stream per claim so subset selection never shifts draws
      Rng rng(cfg.seed ^ (0x9e3779b97f4a7c15ULL * (di + 1)) ^
              (0xbf58476d1ce4e5b9ULL * pi));
      try {
        const EvalOut out = d.eval(ctx, rng);
        rep.representation = out.representation;
        rep.residual = out.residual;
        rep.notes = out.notes;
        if (out.residual <= rep.tolerance) {
          rep.status = ClaimStatus::Pass;
        } else if (d.discrepancy_eligible) {
          rep.status = ClaimStatus::DocumentedDiscrepancy;
        } else {
          rep.status = ClaimStatus::Fail;
        }
      } catch (const Error& e) {
        rep.representation = "n/a";
        if (std::string(e.what()).find("degenerate") != std::string::npos) {
          rep.status = ClaimStatus::Skipped;
        } else {
          rep.status = ClaimStatus::Fail;
          rep.residual = std::numeric_limits<double>::infinity();
        }
        rep.notes = e.what();
      }
      reports.push_back(std::move(rep));
    }
  }
  return reports;
}

std::string report_to_json(const RunConfig& cfg,
                           const std::vector<ClaimReport>& reports) {
  ordered_json j;
  j["schema"] = "ncl-report/1";
  j["config"] = ordered_json::parse(config_to_json(cfg));
  j["claims"] = ordered_json::array();
  int pass = 0, fail = 0, disc = 0, skip = 0;
  for (const auto& r : reports) {
    j["claims"].push_back({{"claim_id", r.claim_id},
                           {"paper_anchor", r.paper_anchor},
                           {"representation", r.representation},
                           {"residual", r.residual},
                           {"tolerance", r.tolerance},
                           {"status", to_string(r.status)},
                           {"notes", r.notes}});
    switch (r.status) {
      case ClaimStatus::Pass: ++pass; break;
      case ClaimStatus::Fail: ++fail; break;
      case ClaimStatus::DocumentedDiscrepancy: ++disc; break;
      case ClaimStatus::Skipped: ++skip; break;
    }
  }
  j["summary"] = {{"pass", pass},
                  {"fail", fail},
                  {"documented_discrepancy", disc},
                  {"skipped", skip},
                  {"all_passed", fail == 0}};
  return j.dump(2) + "\n";
}

std::string report_to_table(const std::vector<ClaimReport>& reports) {
  std::string out;
  char line[512];
  std::snprintf(line, sizeof(line), "%-28s %-16s %-12s %-12s %-24s %s\n",
                "claim", "representation", "residual", "tolerance", "status",
                "notes");
  out += line;
  out += std::string(120, '-') + "\n";
  for (const auto& r : reports) {
    std::snprintf(line, sizeof(line), "%-28s %-16s %-12.3e %-12.3e %-24s %s\n",
                  r.claim_id.c_str(), r.representation.c_str(), r.residual,
                  r.tolerance, to_string(r.status), r.notes.c_str());
    out += line;
  }
  return out;
}

bool all_passed(const std::vector<ClaimReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const ClaimReport& r) {
    return r.status == ClaimStatus::Fail;
  });
}

}  // namespace ncl
