#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"
#include "wittsig/errors.hpp"

using namespace wittsig;

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and Witt signatures of so(2r)_2r and so(2b+1)_2b+1"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  std::string format = "json";
  std::string output;
  std::optional<unsigned> prec_start, prec_cap, threads;
  std::optional<i64> guard;
  std::string config_path;
  app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("-o,--output", output, "write results here instead of stdout");
  app.add_option("--precision-start", prec_start, "initial interval precision in bits (128)");
  app.add_option("--precision-cap", prec_cap, "maximal interval precision in bits (16384)");
  app.add_option("--conductor-guard", guard, "refuse working conductors above this (1000000)");
  app.add_option("--threads", threads, "worker threads (1)");
  app.add_option("--config", config_path, "JSON config file (default: $WITTSIG_CONFIG)");

  int rank = 0;
  auto* alcove = app.add_subcommand("alcove", "dominant weights of so(2r)_2r, one JSON object per line");
  alcove->add_option("--rank,-r", rank)->required();

  std::vector<i64> n_list{1};
  auto* inv = app.add_subcommand("invariants", "twists, quantum dimensions, Gauss sums of C_r");
  inv->add_option("--rank,-r", rank)->required();
  inv->add_option("--n", n_list, "Gauss sum indices")->delimiter(',');

  std::string family = "D";
  std::vector<i64> k_list;
  auto* sig = app.add_subcommand("signature", "sgn sigma_k(sqrt dim) for D_r or B_b");
  sig->add_option("--family", family)->check(CLI::IsMember({"D", "B"}));
  sig->add_option("--rank,-r", rank)->required();
  sig->add_option("--k", k_list, "Galois elements")->required()->delimiter(',');

  std::string claim;
  std::string params_text;
  std::optional<i64> v_rank, v_window;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run a claim verifier (or 'all')");
  verify->add_option("claim", claim, "claim id");
  verify->add_option("--params", params_text, "JSON object of parameters");
  verify->add_option("--rank", v_rank, "shorthand for {\"rank\": N}");
  verify->add_option("--window", v_window, "shorthand for {\"window\": N}");
  verify->add_flag("--list", list, "list claim ids and their default parameters");

  auto* aniso = app.add_subcommand("anisotropy", "complete anisotropy check for D_4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::ok : cli::usage;
  }

  try {
    RunConfig cfg;
    if (config_path.empty()) {
      if (const char* env = std::getenv("WITTSIG_CONFIG"); env != nullptr && *env != '\0') config_path = env;
    }
    if (!config_path.empty()) cfg = load_run_config(config_path);
    if (app.get_option("--format")->count() > 0) cfg.format = parse_format(format);
    if (!output.empty()) cfg.output_path = output;
    if (prec_start) cfg.precision_start_bits = *prec_start;
    if (prec_cap) cfg.precision_cap_bits = *prec_cap;
    if (guard) cfg.conductor_guard = *guard;
    if (threads) cfg.threads = *threads;
    cfg.validate();

    std::ofstream file;
    if (!cfg.output_path.empty()) {
      file.open(cfg.output_path, std::ios::binary);
      if (!file) throw UsageError("cannot write " + cfg.output_path);
    }
    std::ostream& out = cfg.output_path.empty() ? std::cout : file;

    if (alcove->parsed()) return cli::cmd_alcove(cfg, rank, out);
    if (inv->parsed()) return cli::cmd_invariants(cfg, rank, n_list, out);
    if (sig->parsed()) {
      return cli::cmd_signature(cfg, family == "D" ? Family::D : Family::B, rank, k_list, out);
    }
    if (aniso->parsed()) return cli::cmd_anisotropy(cfg, out, std::cerr);
    if (verify->parsed()) {
      if (list) return cli::cmd_list_claims(cfg, out);
      if (claim.empty()) throw UsageError("verify needs a claim id (or --list)");
      nlohmann::json params = nlohmann::json::object();
      if (!params_text.empty()) {
        try {
          params = nlohmann::json::parse(params_text);
        } catch (const nlohmann::json::parse_error& e) {
          throw UsageError(std::string("--params is not valid JSON: ") + e.what());
        }
        if (!params.is_object()) throw UsageError("--params must be a JSON object");
      }
      if (v_rank) params["rank"] = *v_rank;
      if (v_window) params["window"] = *v_window;
      return cli::cmd_verify(cfg, claim, params, out, std::cerr);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::usage;
  } catch (const ConductorGuardExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --conductor-guard to allow it)\n";
    return cli::usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::verification_failed;
  }
  return cli::usage;
}
