#pragma once

#include <string>
#include <vector>

#include "wittsig/report.hpp"
#include "wittsig/run_config.hpp"

namespace wittsig {

struct ClaimInfo {
  std::string id;
  std::string summary;
  nlohmann::ordered_json defaults;  // every accepted parameter with its default
};

const std::vector<ClaimInfo>& list_claims();

/// Runs one verifier. `params` overrides the defaults key by key; unknown ids,
/// unknown keys or ill-typed values throw UsageError. A working conductor above
/// the guard throws ConductorGuardExceeded before any heavy work starts.
Report run_claim(const std::string& id, const nlohmann::json& params, const RunConfig& config);

}  // namespace wittsig
