#pragma once

#include "ncl/fock.hpp"
#include "ncl/landau.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncl {

enum class ClaimStatus { Pass, Fail, DocumentedDiscrepancy, Skipped };

const char* to_string(ClaimStatus s);

/// Per-identity verification record.
struct ClaimReport {
  std::string claim_id;
  std::string paper_anchor;
  std::string representation;
  double residual = 0.0;
  double tolerance = 0.0;
  ClaimStatus status = ClaimStatus::Skipped;
  std::string notes;
};

struct RunConfig {
  std::vector<LandauParams> points;  // parameter points to sweep
  ModeSpec truncation;
  std::map<std::string, double> tolerances;  // claim-class -> value
  std::vector<std::string> checks;           // empty = all
  std::uint64_t seed = 12345;
  std::string units = "natural";
  std::string output_path;

  double tolerance_for(const std::string& claim_class) const;
};

struct ConfigError : Error {
  using Error::Error;
};

RunConfig default_config();
RunConfig load_config(const std::string& path);
std::string config_to_json(const RunConfig& cfg);

/// Stable catalog of claim ids, in report order.
std::vector<std::string> claim_catalog();

/// Runs the selected claims at every parameter point. Deterministic for
/// a fixed config and seed. Throws ConfigError for unknown claim ids.
std::vector<ClaimReport> run_catalog(const RunConfig& cfg);

std::string report_to_json(const RunConfig& cfg,
                           const std::vector<ClaimReport>& reports);
std::string report_to_table(const std::vector<ClaimReport>& reports);

/// true iff no assertable claim failed (documented-discrepancy and
/// skipped do not fail a run).
bool all_passed(const std::vector<ClaimReport>& reports);

}  // namespace ncl
