#include "ncl/claims.hpp"
#include "ncl/evolution.hpp"
#include "ncl/jordan.hpp"
#include "ncl/rng.hpp"
#include "ncl/states.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using ncl::Matrix;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;
constexpr int kExitDegenerate = 4;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ncl::Error("cannot write output file: " + path);
  out << content;
}

std::string default_config_text() {
  return
      "// Default configuration. All quantities are in natural units\n"
      "// (hbar = m = 1 scale); set \"units\" to \"SI-like\" when feeding\n"
      "// dimensional parameter values.\n"
      "//   points       parameter points to sweep\n"
      "//   truncation   per-mode Fock cutoff and safe margin\n"
      "//   tolerances   claim-class -> acceptance threshold\n"
      "//   checks       claim ids to run (empty = the full catalog)\n"
      "//   seed         PRNG seed for randomized property draws\n" +
      ncl::config_to_json(ncl::default_config()) + "\n";
}

ncl::RunConfig resolve_config(const std::string& config_path,
                              std::optional<std::uint64_t> seed,
                              const std::string& out_path) {
  ncl::RunConfig cfg = config_path.empty() ? ncl::default_config()
                                           : ncl::load_config(config_path);
  if (seed) cfg.seed = *seed;
  if (!out_path.empty()) cfg.output_path = out_path;
  return cfg;
}

int cmd_verify(const ncl::RunConfig& cfg) {
  const std::vector<ncl::ClaimReport> reports = ncl::run_catalog(cfg);
  std::cout << ncl::report_to_table(reports);
  const std::string path =
      cfg.output_path.empty() ? "report.json" : cfg.output_path;
  write_file(path, ncl::report_to_json(cfg, reports));
  std::cout << "report written to " << path << "\n";
  return ncl::all_passed(reports) ? kExitOk : kExitClaimFailure;
}

int cmd_spectrum(const ncl::RunConfig& cfg, int k) {
  const ncl::LandauParams p = cfg.points.front();
  const ncl::DerivedFrequencies freqs = ncl::derive_frequencies(p);
  const ncl::CompositeSpace space =
      ncl::make_space({cfg.truncation, cfg.truncation});

  auto builder = [p](const ncl::CompositeSpace& sp) {
    return ncl::build_canonical_operators(p, sp).H_theta;
  };
  const ncl::ConvergenceReport conv = ncl::spectrum_numerical(builder, k, space);
  const std::vector<double> closed = ncl::spectrum_closed_form(p, freqs, k);

  std::printf("%-6s %-18s %-18s %-12s\n", "level", "numerical", "closed-form",
              "delta");
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < k; ++i) {
    const double delta = conv.levels[i] - closed[i];
    std::printf("%-6d %-18.12f %-18.12f %-12.3e\n", i, conv.levels[i],
                closed[i], delta);
    rows.push_back({{"level", i},
                    {"numerical", conv.levels[i]},
                    {"closed_form", closed[i]},
                    {"delta", delta}});
  }
  std::printf("convergence: max relative drift under doubling = %.3e (%s)\n",
              conv.max_rel_drift, conv.converged ? "converged" : "NOT converged");
  if (p.theta != 0.0) {
    std::printf("note: theta != 0, closed-form deltas are informational\n");
  }
  if (!cfg.output_path.empty()) {
    ordered_json j;
    j["levels"] = rows;
    j["max_rel_drift"] = conv.max_rel_drift;
    j["converged"] = conv.converged;
    write_file(cfg.output_path, j.dump(2) + "\n");
  }
  return conv.converged ? kExitOk : kExitNumericalError;
}

int cmd_evolve(const ncl::RunConfig& cfg, double t_max, int steps,
               const std::string& state_spec, const std::string& chirality,
               double h) {
  const ncl::LandauParams p = cfg.points.front();
  const ncl::DerivedFrequencies freqs = ncl::derive_frequencies(p);
  const ncl::EvolutionGenerator gen =
      ncl::calibrated_generators(p, freqs, cfg.truncation);

  const ncl::GeneratorSet* g = nullptr;
  if (chirality == "plus") {
    g = &*gen.plus;
  } else if (chirality == "minus") {
    if (!gen.minus) {
      std::cerr << "evolve: Omega_minus <= 0 at this parameter point; the "
                   "minus-chirality generators are degenerate (C1 diverges). "
                   "Choose a point away from the Landau limit.\n";
      return kExitDegenerate;
    }
    g = &*gen.minus;
  } else {
    throw ncl::ConfigError("evolve: chirality must be plus or minus");
  }

  const int n = cfg.truncation.n_trunc;
  Matrix b0;
  if (state_spec == "stationary") {
    b0 = Matrix::Zero(n, n);
    b0(0, 0) = 1.0;
  } else if (state_spec == "random") {
    // random pure state supported on the lower half of the ladder, away
    // from the truncation corner
    ncl::Rng rng(cfg.seed);
    const int half = n / 2;
    const Matrix u = rng.unitary_matrix(half);
    Matrix e0 = Matrix::Zero(half, half);
    e0(0, 0) = 1.0;
    b0 = Matrix::Zero(n, n);
    b0.topLeftCorner(half, half) = u * e0 * u.adjoint();
  } else {
    throw ncl::ConfigError("evolve: state must be stationary or random");
  }

  std::vector<double> grid;
  for (int i = 1; i <= steps; ++i) grid.push_back(t_max * i / steps);
  const ncl::AuditResult audit =
      ncl::jordan_vs_von_neumann_audit(b0, *g, p.hbar, grid, 1e-8, h);

  std::string csv = "t,state_residual,trace_defect,hermiticity_defect,"
                    "energy_drift\n";
  char line[256];
  for (const auto& pt : audit.points) {
    std::snprintf(line, sizeof(line), "%.6f,%.12e,%.12e,%.12e,%.12e\n", pt.t,
                  pt.state_residual, pt.trace_defect, pt.hermiticity_defect,
                  pt.energy_drift);
    csv += line;
  }
  const std::string path =
      cfg.output_path.empty() ? "trajectory.csv" : cfg.output_path;
  write_file(path, csv);
  std::printf("max state residual %.3e, derivative residual %.3e, %s\n",
              audit.max_state_residual, audit.derivative_residual,
              audit.passed ? "audit passed" : "audit FAILED");
  std::printf("trajectory written to %s\n", path.c_str());
  return audit.passed ? kExitOk : kExitClaimFailure;
}

int cmd_calibrate(const ncl::RunConfig& cfg) {
  const ncl::LandauParams p = cfg.points.front();
  const ncl::DerivedFrequencies freqs = ncl::derive_frequencies(p);
  const ncl::CompositeSpace space =
      ncl::make_space({cfg.truncation, cfg.truncation});
  const ncl::OperatorSet ops = ncl::build_canonical_operators(p, space);
  const ncl::TheoremOneOperators cal = ncl::calibrate_theorem1(p, freqs, ops);

  std::printf("%-10s %-22s %-22s %-12s\n", "coeff", "printed", "fitted",
              "delta");
  auto row = [](const char* name, double paper, double fitted) {
    std::printf("%-10s %-22.15g %-22.15g %-12.3e\n", name, paper, fitted,
                paper - fitted);
  };
  row("yR.c1", cal.paper_y_c1, cal.y_c1);
  row("yR.c2", cal.paper_y_c2, cal.y_c2);
  row("pxR.c1", cal.paper_px_c1, cal.px_c1);
  row("pxR.c2", cal.paper_px_c2, cal.px_c2);
  row("pyR.c1", cal.paper_py_c1, cal.py_c1);
  row("pyR.c2", cal.paper_py_c2, cal.py_c2);
  std::printf("fit residual (worst of three) %.3e\n", cal.fit_residual);

  const ncl::EvolutionGenerator gen =
      ncl::theorem4_generators(p, freqs, cfg.truncation);
  row("S2.scale", gen.plus->paper_s2_factor, 1.0);
  std::printf("S2 scale closes the decomposition exactly iff C1 = 1/2 "
              "(C1 = %.15g here)\n", gen.plus->C1);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"operator-algebra verification tool for the noncommutative "
               "Landau problem"};
  app.require_subcommand(0, 1);

  std::string config_path, out_path;
  std::optional<std::uint64_t> seed;
  bool emit_default = false;
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--seed", seed, "override the configured PRNG seed");
  app.add_option("--out", out_path, "output file path");
  app.add_flag("--emit-default-config", emit_default,
               "print the default configuration and exit");

  auto* verify = app.add_subcommand("verify", "run the full claim catalog");
  auto* spectrum = app.add_subcommand("spectrum", "numerical vs closed-form "
                                                  "energy levels");
  int k = 8;
  spectrum->add_option("-k,--levels", k, "number of levels")
      ->check(CLI::PositiveNumber);
  auto* evolve = app.add_subcommand("evolve", "Jordan-state time evolution "
                                              "with invariant audit");
  double t_max = 10.0, h = 1e-3;
  int steps = 100;
  std::string state_spec = "random", chirality = "plus";
  evolve->add_option("--t-max", t_max, "final time");
  evolve->add_option("--steps", steps, "grid points")->check(CLI::PositiveNumber);
  evolve->add_option("--state", state_spec, "initial state: random|stationary");
  evolve->add_option("--chirality", chirality, "mode to evolve: plus|minus");
  evolve->add_option("--step", h, "RK4 step size")->check(CLI::PositiveNumber);
  auto* calibrate = app.add_subcommand("calibrate",
                                       "printed vs fitted coefficients");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (emit_default) {
      if (out_path.empty()) {
        std::cout << default_config_text();
      } else {
        write_file(out_path, default_config_text());
      }
      return kExitOk;
    }
    const ncl::RunConfig cfg = resolve_config(config_path, seed, out_path);
    if (verify->parsed()) return cmd_verify(cfg);
    if (spectrum->parsed()) return cmd_spectrum(cfg, k);
    if (evolve->parsed()) {
      return cmd_evolve(cfg, t_max, steps, state_spec, chirality, h);
    }
    if (calibrate->parsed()) return cmd_calibrate(cfg);
    std::cout << app.help();
    return kExitOk;
  } catch (const ncl::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalError;
  }
}
