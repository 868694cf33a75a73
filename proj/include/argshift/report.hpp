#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "argshift/bifurcation.hpp"

namespace argshift {

using Json = nlohmann::ordered_json;

/// Everything a CLI run is parameterized by. Identical configs (and seeds)
/// must produce identical reports; timing_ms is the one volatile field.
struct RunConfig {
  std::string command;
  int n = 3;
  ShiftSpec shift;
  int samples = 20;
  std::uint64_t seed = 1;
  double tol = kDefaultRankTol;
  int threads = 1;
  std::string json_path;
};

Json config_to_json(const RunConfig& config);
Json algebra_to_json(const Algebra& algebra);
Json assertion_to_json(const Assertion& assertion);
Json certificate_to_json(const CodimCertificate& certificate);

/// The full report schema:
/// {config, algebra, shift:{kind, matrix}, assertions:[...],
///  certificate:{verdict, max_rank, witness}, timing_ms}
Json report_to_json(const RunConfig& config, const VerificationReport& report,
                    std::int64_t timing_ms);

/// Report for the selfcheck command (no certificate).
Json selfcheck_to_json(const RunConfig& config, const std::vector<Assertion>& checks,
                       std::int64_t timing_ms);

/// Report for the info command.
Json info_to_json(const RunConfig& config, const Algebra& algebra);

std::string render_assertions(const std::vector<Assertion>& assertions);
std::string render_report(const VerificationReport& report);

}  // namespace argshift
