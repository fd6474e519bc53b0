#include "commands.hpp"

#include <ostream>

#include "wittsig/anisotropy.hpp"
#include "wittsig/claims.hpp"
#include "wittsig/errors.hpp"
#include "wittsig/invariants.hpp"

namespace wittsig::cli {

namespace {

using nlohmann::ordered_json;

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << "\r\n";
}

std::string b(bool v) { return v ? "true" : "false"; }

std::string family_name(Family f) { return f == Family::D ? "D" : "B"; }

void write_reports(const RunConfig& cfg, const std::vector<Report>& reports, std::ostream& out) {
  switch (cfg.format) {
    case OutputFormat::json:
      if (reports.size() == 1) {
        out << reports[0].to_json().dump(2) << "\n";
      } else {
        ordered_json all = ordered_json::array();
        for (const Report& r : reports) all.push_back(r.to_json());
        out << all.dump(2) << "\n";
      }
      break;
    case OutputFormat::csv:
      csv_row(out, {"claim", "status", "parameters", "expected", "computed", "note"});
      for (const Report& r : reports) {
        csv_row(out, {r.claim, r.ok ? "ok" : "fail", r.parameters.dump(), r.expected.dump(),
                      r.computed.dump(), r.note});
      }
      break;
    case OutputFormat::text:
      for (const Report& r : reports) {
        out << r.claim << ": " << (r.ok ? "ok" : "FAIL") << "\n";
        out << "  parameters: " << r.parameters.dump() << "\n";
        if (!r.note.empty()) out << "  note: " << r.note << "\n";
        if (!r.ok) {
          out << "  expected: " << r.expected.dump() << "\n";
          out << "  computed: " << r.computed.dump() << "\n";
        }
      }
      break;
  }
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

int cmd_alcove(const RunConfig& cfg, int rank, std::ostream& out) {
  if (rank < 2) throw UsageError("rank must be >= 2");
  const std::vector<Weight> alcove = alcove_D(rank);
  switch (cfg.format) {
    case OutputFormat::json:
      out << alcove_json_lines(rank);
      break;
    case OutputFormat::csv:
      csv_row(out, {"coords2", "level_pairing"});
      for (const Weight& w : alcove) {
        csv_row(out, {nlohmann::json(w.coords2).dump(), std::to_string((w.coords2[0] + w.coords2[1]) / 2)});
      }
      break;
    case OutputFormat::text:
      out << "alcove of so(" << 2 * rank << ")_" << 2 * rank << ": " << alcove.size() << " weights\n";
      for (const Weight& w : alcove) out << "  " << w.to_string() << "\n";
      break;
  }
  return ok;
}

int cmd_invariants(const RunConfig& cfg, int rank, const std::vector<i64>& n_list, std::ostream& out) {
  if (rank < 2) throw UsageError("rank must be >= 2");
  cfg.check_conductor(twist_modulus(rank));
  const CategoryData c = build_category_data(rank, cfg.threads);

  ordered_json gauss = ordered_json::array();
  for (i64 n : n_list) {
    const CyclotomicNumber tau = gauss_sum(c, n);
    ordered_json g;
    g["n"] = n;
    g["tau"] = tau.to_string();
    try {
      g["xi"] = minimize_conductor(central_charge(c, n)).to_string();
    } catch (const std::domain_error& e) {
      g["xi"] = nullptr;
      g["note"] = e.what();
    }
    gauss.push_back(g);
  }

  switch (cfg.format) {
    case OutputFormat::json: {
      ordered_json j = ordered_json::parse(category_json(c));
      j["dim_local"] = decimal_string(dim_local(c), 30);
      j["gauss_sums"] = gauss;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      csv_row(out, {"coords2", "twist_exponent", "twist_modulus", "qdim"});
      for (std::size_t i = 0; i < c.alcove.size(); ++i) {
        csv_row(out, {nlohmann::json(c.alcove[i].coords2).dump(), std::to_string(c.twist_exponents[i]),
                      std::to_string(c.modulus), decimal_string(c.qdims[i], 30)});
      }
      break;
    case OutputFormat::text:
      out << "so(" << 2 * rank << ")_" << 2 * rank << ": " << c.alcove.size() << " simple objects, T-order "
          << c.t_order << "\n";
      out << "  dim = " << decimal_string(c.dim_total, 30) << "\n";
      out << "  dim / " << (rank % 2 ? 8 : 16) << " = " << decimal_string(dim_local(c), 30) << "\n";
      for (const auto& g : gauss) {
        out << "  n = " << g["n"].get<i64>() << ": xi = "
            << (g["xi"].is_null() ? std::string("undefined") : g["xi"].get<std::string>()) << "\n";
      }
      break;
  }
  return ok;
}

int cmd_signature(const RunConfig& cfg, Family family, int rank, const std::vector<i64>& k_list,
                  std::ostream& out) {
  if (rank < 2) throw UsageError("rank must be >= 2");
  if (k_list.empty()) throw UsageError("at least one k is required");
  const i64 n = signature_conductor(family, rank);
  cfg.check_conductor(n);
  std::vector<Sign> signs;
  for (i64 k : k_list) {
    if (std::gcd(mod(k, n), n) != 1) {
      throw UsageError("k = " + std::to_string(k) + " is not coprime to the conductor " + std::to_string(n));
    }
    signs.push_back(signature(family, rank, k, cfg.schedule()));
  }
  if (cfg.format == OutputFormat::csv) csv_row(out, {"family", "rank", "k", "sign"});
  for (std::size_t i = 0; i < k_list.size(); ++i) {
    switch (cfg.format) {
      case OutputFormat::json: {
        ordered_json j;
        j["family"] = family_name(family);
        j["rank"] = rank;
        j["k"] = k_list[i];
        j["sign"] = to_int(signs[i]);
        out << j.dump() << "\n";
        break;
      }
      case OutputFormat::csv:
        csv_row(out, {family_name(family), std::to_string(rank), std::to_string(k_list[i]),
                      std::to_string(to_int(signs[i]))});
        break;
      case OutputFormat::text:
        out << "eps_" << family_name(family) << rank << "(sigma_" << k_list[i]
            << ") = " << (signs[i] == Sign::positive ? "+1" : "-1") << "\n";
        break;
    }
  }
  return ok;
}

int cmd_verify(const RunConfig& cfg, const std::string& claim_id, const nlohmann::json& params,
               std::ostream& out, std::ostream& progress) {
  std::vector<std::string> ids;
  if (claim_id == "all") {
    if (!params.is_null() && !params.empty()) throw UsageError("parameters cannot be combined with 'all'");
    for (const ClaimInfo& c : list_claims()) ids.push_back(c.id);
  } else {
    ids.push_back(claim_id);
  }
  std::vector<Report> reports;
  bool all_ok = true;
  for (const std::string& id : ids) {
    progress << "[wittsig] running " << id << "\n" << std::flush;
    reports.push_back(run_claim(id, claim_id == "all" ? nlohmann::json() : params, cfg));
    all_ok = all_ok && reports.back().ok;
    progress << "[wittsig] " << id << ": " << (reports.back().ok ? "ok" : "FAIL") << "\n";
  }
  write_reports(cfg, reports, out);
  return all_ok ? ok : verification_failed;
}

int cmd_list_claims(const RunConfig& cfg, std::ostream& out) {
  const auto& claims = list_claims();
  switch (cfg.format) {
    case OutputFormat::json: {
      ordered_json all = ordered_json::array();
      for (const ClaimInfo& c : claims) all.push_back({{"id", c.id}, {"summary", c.summary}, {"defaults", c.defaults}});
      out << all.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      csv_row(out, {"id", "summary", "defaults"});
      for (const ClaimInfo& c : claims) csv_row(out, {c.id, c.summary, c.defaults.dump()});
      break;
    case OutputFormat::text:
      for (const ClaimInfo& c : claims) out << c.id << "  " << c.summary << "  " << c.defaults.dump() << "\n";
      break;
  }
  return ok;
}

int cmd_anisotropy(const RunConfig& cfg, std::ostream& out, std::ostream& progress) {
  cfg.check_conductor(twist_modulus(4));
  progress << "[wittsig] building so(8)_8 data\n" << std::flush;
  const AnisotropyD4 pipeline(cfg.threads, cfg.schedule());
  progress << "[wittsig] running the filters\n";
  const Report rep = pipeline.report();
  switch (cfg.format) {
    case OutputFormat::json:
      out << rep.to_json().dump(2) << "\n";
      break;
    case OutputFormat::csv:
      csv_row(out, {"a1", "a2", "dim", "totally_positive", "norm", "norm_integral", "ratio_admissible"});
      for (const auto& e : rep.computed["filters"]["candidates"]) {
        csv_row(out, {std::to_string(e["a1"].get<int>()), std::to_string(e["a2"].get<int>()),
                      e["dim"].get<std::string>(), b(e["totally_positive"].get<bool>()),
                      e["norm"].is_null() ? "" : e["norm"].get<std::string>(),
                      e["norm_integral"].is_null() ? "" : b(e["norm_integral"].get<bool>()),
                      e["ratio_admissible"].is_null() ? "" : b(e["ratio_admissible"].get<bool>())});
      }
      break;
    case OutputFormat::text:
      out << pipeline.text_report();
      break;
  }
  return rep.ok ? ok : verification_failed;
}

}  // namespace wittsig::cli
