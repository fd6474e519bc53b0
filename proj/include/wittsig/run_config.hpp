#pragma once

#include <string>

#include "json.hpp"
#include "wittsig/certified.hpp"
#include "wittsig/number_theory.hpp"

namespace wittsig {

enum class OutputFormat { json, csv, text };

OutputFormat parse_format(const std::string& name);  // throws UsageError
std::string format_name(OutputFormat f);

/// Bad command-line input or claim parameters (exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  unsigned precision_start_bits = 128;
  unsigned precision_cap_bits = 16384;
  i64 conductor_guard = 1'000'000;
  OutputFormat format = OutputFormat::json;
  std::string output_path;  // empty: stdout
  unsigned threads = 1;

  PrecisionSchedule schedule() const { return {precision_start_bits, precision_cap_bits}; }

  /// Throws UsageError unless start <= cap, guard > 0 and threads > 0.
  void validate() const;

  /// Throws ConductorGuardExceeded if n is above the guard.
  void check_conductor(i64 n) const;

  /// Overrides fields present in a JSON object (keys as the member names,
  /// "format" as a string). Unknown keys are rejected.
  void merge(const nlohmann::json& j);
};

/// Reads a JSON config file into defaults. Throws UsageError on I/O or parse
/// errors.
RunConfig load_run_config(const std::string& path);

}  // namespace wittsig
