#pragma once

// Subcommand bodies, separated from argument parsing so tests can drive them
// with string streams. Each returns the process exit code.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "wittsig/run_config.hpp"
#include "wittsig/signature.hpp"

namespace wittsig::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage = 2 };

int cmd_alcove(const RunConfig& cfg, int rank, std::ostream& out);
int cmd_invariants(const RunConfig& cfg, int rank, const std::vector<i64>& n_list, std::ostream& out);
int cmd_signature(const RunConfig& cfg, Family family, int rank, const std::vector<i64>& k_list,
                  std::ostream& out);
/// Runs one claim, or every registered claim when `claim_id` is "all".
int cmd_verify(const RunConfig& cfg, const std::string& claim_id, const nlohmann::json& params,
               std::ostream& out, std::ostream& progress);
int cmd_list_claims(const RunConfig& cfg, std::ostream& out);
int cmd_anisotropy(const RunConfig& cfg, std::ostream& out, std::ostream& progress);

/// RFC 4180 field: quoted when it contains a comma, quote or line break.
std::string csv_field(const std::string& s);

}  // namespace wittsig::cli
