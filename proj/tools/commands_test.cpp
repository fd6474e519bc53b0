#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "wittsig/errors.hpp"

using namespace wittsig;
using namespace wittsig::cli;
using nlohmann::json;

namespace {

RunConfig with_format(OutputFormat f) {
  RunConfig c;
  c.format = f;
  return c;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("signature command") {
  std::ostringstream out;
  CHECK(cmd_signature({}, Family::D, 5, {5, 1}, out) == ok);
  const auto ls = lines(out.str());
  REQUIRE(ls.size() == 2);
  CHECK(json::parse(ls[0]) == json{{"family", "D"}, {"rank", 5}, {"k", 5}, {"sign", -1}});
  CHECK(json::parse(ls[1])["sign"] == 1);

  std::ostringstream csv;
  cmd_signature(with_format(OutputFormat::csv), Family::B, 23, {9, 193}, csv);
  CHECK(csv.str() == "family,rank,k,sign\r\nB,23,9,1\r\nB,23,193,-1\r\n");

  std::ostringstream text;
  cmd_signature(with_format(OutputFormat::text), Family::D, 4, {9}, text);
  CHECK(text.str() == "eps_D4(sigma_9) = -1\n");

  std::ostringstream sink;
  CHECK_THROWS_AS(cmd_signature({}, Family::D, 4, {7}, sink), UsageError);
  CHECK_THROWS_AS(cmd_signature({}, Family::D, 4, {}, sink), UsageError);
  CHECK_THROWS_AS(cmd_signature({}, Family::D, 1, {1}, sink), UsageError);
}

TEST_CASE("conductor guard names the conductor") {
  RunConfig cfg;
  cfg.conductor_guard = 100;
  std::ostringstream sink;
  try {
    cmd_signature(cfg, Family::D, 40, {1}, sink);
    FAIL("guard did not fire");
  } catch (const ConductorGuardExceeded& e) {
    CHECK(e.conductor() == 316);
    CHECK(std::string(e.what()).find("316") != std::string::npos);
  }
  CHECK(sink.str().empty());
  std::ostringstream progress;
  CHECK_THROWS_AS(cmd_verify(cfg, "anisotropy-d4", json(), sink, progress), ConductorGuardExceeded);
}

TEST_CASE("alcove command") {
  std::ostringstream out;
  cmd_alcove({}, 3, out);
  CHECK(lines(out.str()).size() == 84);
  std::ostringstream csv;
  cmd_alcove(with_format(OutputFormat::csv), 2, csv);
  const auto ls = lines(csv.str());
  CHECK(ls.size() == 26);
  CHECK(ls[0] == "coords2,level_pairing\r");
  // a JSON array contains commas, so it is quoted
  CHECK(ls[1].front() == '"');
  std::ostringstream sink;
  CHECK_THROWS_AS(cmd_alcove({}, 1, sink), UsageError);
}

TEST_CASE("invariants command") {
  std::ostringstream out;
  CHECK(cmd_invariants({}, 3, {1, 2}, out) == ok);
  const json j = json::parse(out.str());
  CHECK(j["gauss_sums"].size() == 2);
  CHECK(j["gauss_sums"][0]["n"] == 1);
  CHECK(j["gauss_sums"][0]["xi"].is_string());
}

TEST_CASE("verify: status and exit code") {
  std::ostringstream out, progress;
  CHECK(cmd_verify({}, "periodicity", json{{"rank", 4}, {"window", 100}}, out, progress) == ok);
  const json j = json::parse(out.str());
  CHECK(j["status"] == "ok");
  CHECK(j["claim"] == "periodicity");
  CHECK(progress.str().find("[wittsig] periodicity: ok") != std::string::npos);
  // the data stream carries no progress text
  CHECK(out.str().find("[wittsig]") == std::string::npos);

  std::ostringstream out2, progress2;
  CHECK(cmd_verify({}, "jacobi-conditions", json{{"primes", {13}}}, out2, progress2) == verification_failed);
  CHECK(json::parse(out2.str())["status"] == "fail");

  std::ostringstream sink;
  CHECK_THROWS_AS(cmd_verify({}, "no-such-claim", json(), sink, sink), UsageError);
  CHECK_THROWS_AS(cmd_verify({}, "periodicity", json{{"rnak", 4}}, sink, sink), UsageError);
  CHECK_THROWS_AS(cmd_verify({}, "periodicity", json{{"rank", "four"}}, sink, sink), UsageError);
  CHECK_THROWS_AS(cmd_verify({}, "all", json{{"rank", 4}}, sink, sink), UsageError);
}

TEST_CASE("list of claims") {
  std::ostringstream out;
  cmd_list_claims({}, out);
  const json j = json::parse(out.str());
  std::vector<std::string> ids;
  for (const auto& c : j) ids.push_back(c["id"]);
  for (const char* id : {"prop-d-odd-sign", "prop-d-even-sign", "prop-bd-separation", "thm-independence-odd",
                         "thm-pointed-ising", "lemma-s-parity", "lemma-sine-galois", "anisotropy-d4"}) {
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
}

TEST_CASE("anisotropy command is deterministic") {
  std::ostringstream a, b, p;
  RunConfig four;
  four.threads = 4;
  CHECK(cmd_anisotropy({}, a, p) == ok);
  CHECK(cmd_anisotropy(four, b, p) == ok);
  CHECK(a.str() == b.str());
  CHECK(json::parse(a.str())["computed"]["verdict"] == "completely anisotropic");

  std::ostringstream csv;
  cmd_anisotropy(with_format(OutputFormat::csv), csv, p);
  const auto ls = lines(csv.str());
  CHECK(ls.size() == 36);
  CHECK(ls[0] == "a1,a2,dim,totally_positive,norm,norm_integral,ratio_admissible\r");
}

TEST_CASE("RFC 4180 fields") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("") == "");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(csv_field("cr\r") == "\"cr\r\"");
}

TEST_CASE("run configuration") {
  RunConfig c;
  c.merge(json{{"precision_start_bits", 256}, {"format", "csv"}, {"threads", 3}, {"output", "x.csv"}});
  CHECK(c.precision_start_bits == 256);
  CHECK(c.precision_cap_bits == 16384);
  CHECK(c.format == OutputFormat::csv);
  CHECK(c.threads == 3);
  CHECK(c.output_path == "x.csv");
  c.validate();

  CHECK_THROWS_AS(c.merge(json{{"precision", 1}}), UsageError);
  CHECK_THROWS_AS(c.merge(json{{"format", "xml"}}), UsageError);
  RunConfig bad;
  bad.precision_start_bits = 1024;
  bad.precision_cap_bits = 512;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  RunConfig guard;
  guard.conductor_guard = 0;
  CHECK_THROWS_AS(guard.validate(), UsageError);
  CHECK_NOTHROW(RunConfig{}.check_conductor(1'000'000));
  CHECK_THROWS_AS(RunConfig{}.check_conductor(1'000'001), ConductorGuardExceeded);

  const std::string path = "commands_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"conductor_guard": 5000, "format": "text"})";
  }
  const RunConfig loaded = load_run_config(path);
  CHECK(loaded.conductor_guard == 5000);
  CHECK(loaded.format == OutputFormat::text);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_run_config("does/not/exist.json"), UsageError);
}
