#pragma once

#include <string>

#include "json.hpp"

namespace wittsig {

/// Outcome of one checked claim: {claim, parameters, expected, computed, status}.
struct Report {
  std::string claim;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  nlohmann::ordered_json expected;
  nlohmann::ordered_json computed;
  bool ok = false;
  std::string note;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["parameters"] = parameters;
    j["expected"] = expected;
    j["computed"] = computed;
    j["status"] = ok ? "ok" : "fail";
    if (!note.empty()) j["note"] = note;
    return j;
  }
};

}  // namespace wittsig
