#include "wittsig/run_config.hpp"

#include <fstream>

#include "wittsig/errors.hpp"

namespace wittsig {

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw UsageError("unknown output format '" + name + "' (json, csv, text)");
}

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "json";
}

void RunConfig::validate() const {
  if (precision_start_bits < 2) throw UsageError("precision start must be at least 2 bits");
  if (precision_start_bits > precision_cap_bits) {
    throw UsageError("precision start (" + std::to_string(precision_start_bits) +
                     ") exceeds cap (" + std::to_string(precision_cap_bits) + ")");
  }
  if (conductor_guard <= 0) throw UsageError("conductor guard must be positive");
  if (threads == 0) throw UsageError("thread count must be positive");
}

void RunConfig::check_conductor(i64 n) const {
  if (n > conductor_guard) throw ConductorGuardExceeded(n, conductor_guard);
}

void RunConfig::merge(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "precision_start_bits") {
        precision_start_bits = value.get<unsigned>();
      } else if (key == "precision_cap_bits") {
        precision_cap_bits = value.get<unsigned>();
      } else if (key == "conductor_guard") {
        conductor_guard = value.get<i64>();
      } else if (key == "format") {
        format = parse_format(value.get<std::string>());
      } else if (key == "output") {
        output_path = value.get<std::string>();
      } else if (key == "threads") {
        threads = value.get<unsigned>();
      } else {
        throw UsageError("unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad config value: ") + e.what());
  }
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  RunConfig cfg;
  try {
    cfg.merge(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  return cfg;
}

}  // namespace wittsig
