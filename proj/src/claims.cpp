#include "wittsig/claims.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "wittsig/anisotropy.hpp"
#include "wittsig/errors.hpp"
#include "wittsig/signature.hpp"

namespace wittsig {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Defaults overlaid with user values; key set fixed by the defaults.
class Params {
 public:
  Params(const std::string& claim, const ordered_json& defaults, const json& given)
      : claim_(claim), values_(defaults) {
    if (given.is_null()) return;
    if (!given.is_object()) throw UsageError(claim + ": parameters must be a JSON object");
    for (const auto& [key, value] : given.items()) {
      if (!values_.contains(key)) {
        std::string known;
        for (const auto& [k, v] : defaults.items()) known += (known.empty() ? "" : ", ") + k;
        throw UsageError(claim + ": unknown parameter '" + key + "' (accepted: " +
                         (known.empty() ? "none" : known) + ")");
      }
      values_[key] = value;
    }
  }

  template <class T>
  T get(const std::string& key) const {
    try {
      return values_.at(key).get<T>();
    } catch (const json::exception&) {
      throw UsageError(claim_ + ": parameter '" + key + "' has the wrong type");
    }
  }

  i64 integer(const std::string& key, i64 min) const {
    const i64 v = get<i64>(key);
    if (v < min) throw UsageError(claim_ + ": parameter '" + key + "' must be >= " + std::to_string(min));
    return v;
  }

  std::vector<i64> list(const std::string& key, i64 min) const {
    const auto v = get<std::vector<i64>>(key);
    for (i64 x : v) {
      if (x < min) throw UsageError(claim_ + ": entries of '" + key + "' must be >= " + std::to_string(min));
    }
    return v;
  }

  const ordered_json& values() const { return values_; }

  [[noreturn]] void fail(const std::string& why) const { throw UsageError(claim_ + ": " + why); }

 private:
  std::string claim_;
  ordered_json values_;
};

Report start(const std::string& claim, const Params& p) {
  Report r;
  r.claim = claim;
  r.parameters = p.values();
  return r;
}

int to_rank(i64 v) { return static_cast<int>(v); }

ordered_json sign_json(Sign s) { return to_int(s); }

// ---------------------------------------------------------------- roots

Report lemma_d_count(const Params& p, const RunConfig&) {
  const i64 r_max = p.integer("r_max", 2);
  Report rep = start("lemma-d-count", p);
  ordered_json bad = ordered_json::array();
  i64 checked = 0;
  for (int r = 2; r <= r_max; ++r) {
    for (i64 j = 1; j <= 2 * r; ++j, ++checked) {
      const i64 a = d_count(r, j);
      const i64 b = d_count_bruteforce(r, j);
      if (a != b && bad.size() < 10) bad.push_back({{"r", r}, {"j", j}, {"closed", a}, {"count", b}});
    }
  }
  rep.expected = "closed form equals root count";
  rep.computed = {{"pairs_checked", checked}, {"mismatches", bad}};
  rep.ok = bad.empty();
  return rep;
}

Report lemma_s_parity(const Params& p, const RunConfig&) {
  const i64 r_max = p.integer("r_max", 1);
  Report rep = start("lemma-s-parity", p);
  ordered_json odd = ordered_json::array();
  for (i64 r = 1; r <= r_max; ++r) {
    if (s_set(r).size() % 2 != 0) odd.push_back(r);
  }
  rep.expected = "|S_r| even";
  rep.computed = {{"ranks_checked", r_max}, {"odd_sizes", odd}};
  rep.ok = odd.empty();
  return rep;
}

// ---------------------------------------------------------------- exact

Report lemma_sine_galois(const Params& p, const RunConfig& cfg) {
  const i64 m_max = p.integer("m_max", 1);
  cfg.check_conductor(std::lcm<i64>(2 * m_max, 4));
  Report rep = start("lemma-sine-galois", p);
  ordered_json bad = ordered_json::array();
  i64 checked = 0;
  for (i64 m = 1; m <= m_max; ++m) {
    const i64 n = std::lcm<i64>(2 * m, 4);
    for (i64 j = 1; j < 2 * m; ++j) {
      const CyclotomicNumber s = sin_pi_frac(j, m);
      for (i64 k = 1; k < n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        const i64 t = mod(k * j, 2 * m);
        const int side = t == 0 || t == m ? 0 : (t < m ? 1 : -1);
        const Sign expected = sign_of(jacobi(-1, k) * side);
        const Sign got = certified_sign(galois_apply(k, s), cfg.schedule());
        ++checked;
        if (got != expected && bad.size() < 10) bad.push_back({{"m", m}, {"j", j}, {"k", k}});
      }
    }
  }
  rep.expected = "sgn sigma_k(sin(j pi/m)) = (-1/k) sgn sin(kj pi/m)";
  rep.computed = {{"cases_checked", checked}, {"mismatches", bad}};
  rep.ok = bad.empty();
  return rep;
}

// ---------------------------------------------------------------- invariants

Report dimension_check(const Params& p, const RunConfig& cfg) {
  const auto ranks = p.list("ranks", 2);
  for (i64 r : ranks) cfg.check_conductor(twist_modulus(to_rank(r)));
  Report rep = start("dimension-check", p);
  ordered_json rows = ordered_json::array();
  rep.ok = true;
  for (i64 r64 : ranks) {
    const int r = to_rank(r64);
    const CategoryData c = build_category_data(r, cfg.threads);
    const CyclotomicNumber d = sqrt_dim_formula_D(r);
    const long factor = r % 2 == 1 ? 8 : 16;
    const bool eq = c.dim_total == (d * d).scaled(Rational(factor));
    rows.push_back({{"rank", r},
                    {"objects", c.alcove.size()},
                    {"sum_d2", decimal_string(c.dim_total, 30)},
                    {"factor", factor},
                    {"D_r", decimal_string(d, 30)},
                    {"equal", eq}});
    rep.ok = rep.ok && eq;
  }
  rep.expected = "sum of d^2 = 8 D_r^2 (r odd) or 16 D_r^2 (r even), exactly";
  rep.computed = rows;
  return rep;
}

Report central_charge_claim(const Params& p, const RunConfig& cfg) {
  const auto ranks = p.list("ranks", 2);
  for (i64 r : ranks) cfg.check_conductor(twist_modulus(to_rank(r)));
  Report rep = start("central-charge", p);
  ordered_json rows = ordered_json::array();
  rep.ok = true;
  for (i64 r64 : ranks) {
    const int r = to_rank(r64);
    const CategoryData c = build_category_data(r, cfg.threads);
    const CyclotomicNumber xi = minimize_conductor(central_charge(c, 1));
    const CyclotomicNumber want = CyclotomicNumber::zeta(8, r64 * r64);
    const bool eq = xi == want;
    rows.push_back({{"rank", r}, {"xi1", xi.to_string()}, {"expected", want.to_string()}, {"equal", eq}});
    rep.ok = rep.ok && eq;
  }
  rep.expected = "xi_1 = exp(pi i r^2 / 4)";
  rep.computed = rows;
  return rep;
}

Report t_order_claim(const Params& p, const RunConfig& cfg) {
  const auto ranks = p.list("ranks", 2);
  for (i64 r : ranks) cfg.check_conductor(twist_modulus(to_rank(r)));
  Report rep = start("t-order", p);
  ordered_json rows = ordered_json::array();
  rep.ok = true;
  for (i64 r : ranks) {
    const i64 n = t_order(to_rank(r));
    const i64 odd = 2 * r - 1;
    const i64 two_part = n / odd;
    bool ok = n % odd == 0 && two_part > 0 && (two_part & (two_part - 1)) == 0 && two_part <= 16;
    if (r % 2 == 1) ok = ok && n == 16 * odd;
    rows.push_back({{"rank", r}, {"N", n}, {"two_part", n % odd == 0 ? two_part : 0}, {"ok", ok}});
    rep.ok = rep.ok && ok;
  }
  rep.expected = "N_r = 2^s (2r-1), 0 <= s <= 4; s = 4 for odd r";
  rep.computed = rows;
  return rep;
}

Report invertibles_claim(const Params& p, const RunConfig& cfg) {
  const auto ranks = p.list("ranks", 2);
  for (i64 r : ranks) cfg.check_conductor(twist_modulus(to_rank(r)));
  Report rep = start("lemma-invertibles", p);
  ordered_json rows = ordered_json::array();
  rep.ok = true;
  for (i64 r : ranks) {
    for (const InvertibleDatum& d : invertible_data(to_rank(r))) {
      const bool in = in_alcove_D(d.weight);
      rows.push_back({{"rank", r},
                      {"object", d.name},
                      {"weight", d.weight.to_string()},
                      {"in_alcove", in},
                      {"twist_exponent", d.twist_exponent},
                      {"matches", d.matches}});
      rep.ok = rep.ok && in && d.matches;
    }
  }
  rep.expected = "theta = exp(r^2 pi i/2), 1, exp(r^2 pi i/2)";
  rep.computed = rows;
  return rep;
}

// ---------------------------------------------------------------- signature

Report prop_d_odd_sign(const Params& p, const RunConfig& cfg) {
  const auto ranks = p.list("ranks", 2);
  for (i64 r : ranks) {
    if (mod(r, 8) != 5) p.fail("rank " + std::to_string(r) + " is not 5 mod 8");
    cfg.check_conductor(signature_conductor(Family::D, to_rank(r)));
  }
  Report rep = start("prop-d-odd-sign", p);
  ordered_json rows = ordered_json::array();
  rep.ok = true;
  for (i64 r : ranks) {
    const Sign s = signature_D(to_rank(r), r, cfg.schedule());
    rows.push_back({{"rank", r}, {"k", r}, {"sign", sign_json(s)}});
    rep.ok = rep.ok && s == Sign::negative;
  }
  rep.expected = "eps_{D_r}(sigma_r) = -1";
  rep.computed = rows;
  return rep;
}

Report prop_d_even_sign(const Params& p, const RunConfig& cfg) {
  const auto rs = p.list("r_values", 2);
  const auto ss = p.list("s_values", 2);
  for (i64 r : rs) {
    if (mod(r, 8) != 4) p.fail("r = " + std::to_string(r) + " is not 4 mod 8");
    cfg.check_conductor(signature_conductor(Family::D, to_rank(r)));
  }
  for (i64 s : ss) {
    if (mod(s, 8) != 6) p.fail("s = " + std::to_string(s) + " is not 6 mod 8");
    cfg.check_conductor(signature_conductor(Family::D, to_rank(s)));
  }
  Report rep = start("prop-d-even-sign", p);
  ordered_json rows = ordered_json::array();
  rep.ok = true;
  auto run = [&](i64 rank, i64 k) {
    const Sign s = signature_D(to_rank(rank), k, cfg.schedule());
    rows.push_back({{"rank", rank}, {"k", k}, {"sign", sign_json(s)}});
    rep.ok = rep.ok && s == Sign::negative;
  };
  for (i64 r : rs) run(r, 2 * r + 1);
  for (i64 s : ss) run(s, s - 1);
  rep.expected = "eps_{D_r}(sigma_{2r+1}) = eps_{D_s}(sigma_{s-1}) = -1";
  rep.computed = rows;
  return rep;
}

Report bd_separation(const Params& p, const RunConfig& cfg) {
  const i64 r = p.integer("rank", 2);
  cfg.check_conductor(signature_conductor(Family::B, to_rank(2 * r - 1)));
  Report rep = verify_BD_separation(to_rank(r), cfg.schedule());
  rep.parameters = p.values();
  return rep;
}

Report periodicity(const Params& p, const RunConfig& cfg) {
  const i64 r = p.integer("rank", 2);
  const i64 window = p.integer("window", 1);
  cfg.check_conductor(signature_conductor(Family::D, to_rank(r)));
  Report rep = check_periodicity_D(to_rank(r), window, cfg.threads, cfg.schedule());
  rep.parameters = p.values();
  return rep;
}

Report shift_b(const Params& p, const RunConfig& cfg) {
  const i64 b = p.integer("b", 2);
  cfg.check_conductor(signature_conductor(Family::B, to_rank(b)));
  Report rep;
  try {
    rep = check_shift_B(to_rank(b), p.get<i64>("k"), p.get<i64>("x_min"), p.get<i64>("x_max"),
                        cfg.schedule());
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    p.fail(e.what());
  }
  rep.parameters = p.values();
  return rep;
}

Report independence_odd(const Params& p, const RunConfig& cfg) {
  const auto primes = p.list("primes", 2);
  for (i64 a : primes) cfg.check_conductor(4 * (a + 1) - 4);
  Report rep;
  try {
    rep = verify_independence_D_odd(primes, cfg.threads, cfg.schedule());
  } catch (const std::invalid_argument& e) {
    p.fail(e.what());
  }
  rep.parameters = p.values();
  return rep;
}

Report independence_even(const Params& p, const RunConfig& cfg) {
  const auto p7 = p.list("primes7", 2);
  const auto p11 = p.list("primes11", 2);
  for (i64 a : p7) cfg.check_conductor(4 * (a + 1) - 4);
  for (i64 a : p11) cfg.check_conductor(4 * (a + 1) - 4);
  Report rep;
  try {
    rep = verify_independence_D_even(p7, p11, cfg.threads, cfg.schedule());
  } catch (const std::invalid_argument& e) {
    p.fail(e.what());
  }
  rep.parameters = p.values();
  return rep;
}

Report jacobi_conditions(const Params& p, const RunConfig&) {
  Report rep = verify_jacobi_conditions(p.list("primes", 3));
  rep.parameters = p.values();
  return rep;
}

Report pointed_ising(const Params& p, const RunConfig& cfg) {
  const auto primes = p.list("primes", 2);
  const auto h1 = p.list("h1", 1);
  const auto ex = p.list("exponents", 1);
  const i64 hmax = h1.empty() ? 1 : *std::max_element(h1.begin(), h1.end());
  for (i64 a : primes) cfg.check_conductor(std::max<i64>(4 * a, 4 * hmax * a));
  std::vector<int> exps(ex.begin(), ex.end());
  Report rep;
  try {
    rep = verify_pointed_ising(primes, h1, exps, cfg.schedule());
  } catch (const std::invalid_argument& e) {
    p.fail(e.what());
  }
  rep.parameters = p.values();
  return rep;
}

Report pointed_jacobi(const Params& p, const RunConfig& cfg) {
  const i64 p_max = p.integer("p_max", 2);
  cfg.check_conductor(4 * p_max);
  Report rep = start("pointed-jacobi", p);
  ordered_json bad = ordered_json::array();
  ordered_json primes = ordered_json::array();
  i64 checked = 0;
  for (i64 q = 5; q <= p_max; q += 4) {
    if (!is_prime(static_cast<std::uint64_t>(q))) continue;
    primes.push_back(q);
    for (i64 k = 1; k < 4 * q; ++k) {
      if (std::gcd(k, 4 * q) != 1) continue;
      ++checked;
      if (to_int(pointed_signature(q, k, cfg.schedule())) != jacobi(k, q) && bad.size() < 10) {
        bad.push_back({{"p", q}, {"k", k}});
      }
    }
  }
  rep.expected = "sgn sigma_k(sqrt p) = (k/p) for p = 1 mod 4";
  rep.computed = {{"primes", primes}, {"cases_checked", checked}, {"mismatches", bad}};
  rep.ok = bad.empty();
  return rep;
}

Report ising_odd(const Params& p, const RunConfig&) {
  const i64 m_max = p.integer("m_max", 1);
  Report rep = start("ising-odd-m", p);
  ordered_json hits = ordered_json::array();
  for (i64 m = 1; m <= m_max; m += 2) {
    for (i64 l = 0; l < 8; ++l) {
      if (ising_obstruction(m, l)) hits.push_back({{"m", m}, {"l", l}});
    }
  }
  rep.expected = "exp(2 pi i (m + 2l)/16) != 1 for odd m";
  rep.computed = {{"hits", hits}};
  rep.ok = hits.empty();
  return rep;
}

Report homomorphism(const Params& p, const RunConfig& cfg) {
  const i64 count = p.integer("count", 1);
  const auto seed = p.get<std::uint64_t>("seed");
  const i64 d_max = p.integer("d_rank_max", 2);
  const i64 b_max = p.integer("b_rank_max", 2);
  std::mt19937_64 rng(seed);
  auto pick = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
  struct Cat {
    Family family;
    int rank;
  };
  auto draw = [&] {
    const bool d = pick(0, 1) == 0;
    return Cat{d ? Family::D : Family::B, to_rank(pick(2, d ? d_max : b_max))};
  };
  auto value = [](const Cat& c) {
    return c.family == Family::D ? sqrt_dim_formula_D(c.rank) : sqrt_dim_formula_B(c.rank);
  };
  auto name = [](const Cat& c) { return std::string(c.family == Family::D ? "D" : "B") + std::to_string(c.rank); };

  Report rep = start("signature-homomorphism", p);
  ordered_json rows = ordered_json::array();
  rep.ok = true;
  for (i64 i = 0; i < count; ++i) {
    const Cat a = draw();
    const Cat b = draw();
    const i64 n = std::lcm(signature_conductor(a.family, a.rank), signature_conductor(b.family, b.rank));
    cfg.check_conductor(n);
    i64 k = pick(1, n - 1);
    while (std::gcd(k, n) != 1) k = pick(1, n - 1);
    const Sign whole = certified_sign(galois_apply(k, embed(value(a), n) * embed(value(b), n)), cfg.schedule());
    const Sign parts = signature(a.family, a.rank, k, cfg.schedule()) *
                       signature(b.family, b.rank, k, cfg.schedule());
    rows.push_back({{"A", name(a)}, {"B", name(b)}, {"k", k}, {"product", sign_json(whole)},
                    {"factors", sign_json(parts)}});
    rep.ok = rep.ok && whole == parts;
  }
  rep.expected = "sgn sigma_k(sqrt dim A * sqrt dim B) = eps_A(sigma_k) eps_B(sigma_k)";
  rep.computed = rows;
  return rep;
}

// ---------------------------------------------------------------- anisotropy

Report anisotropy(const Params& p, const RunConfig& cfg) {
  cfg.check_conductor(twist_modulus(4));
  Report rep = AnisotropyD4(cfg.threads, cfg.schedule()).report();
  rep.parameters.update(p.values());
  return rep;
}

using Runner = std::function<Report(const Params&, const RunConfig&)>;

struct Entry {
  ClaimInfo info;
  Runner run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    auto add = [&](std::string id, std::string summary, ordered_json defaults, Runner run) {
      e.push_back({{std::move(id), std::move(summary), std::move(defaults)}, std::move(run)});
    };
    add("lemma-d-count", "closed form of d_r(j) against a root count", {{"r_max", 50}}, lemma_d_count);
    add("lemma-s-parity", "|S_r| is even", {{"r_max", 200}}, lemma_s_parity);
    add("lemma-sine-galois", "signs of Galois-conjugated sines", {{"m_max", 30}}, lemma_sine_galois);
    add("dimension-check", "sum of d^2 against the sine-product formula", {{"ranks", {2, 3, 4}}},
        dimension_check);
    add("central-charge", "xi_1(C_r) = exp(pi i r^2/4)", {{"ranks", {2, 3, 4}}}, central_charge_claim);
    add("t-order", "order of the T-matrix", {{"ranks", {3, 4, 5}}}, t_order_claim);
    add("lemma-invertibles", "invertible objects and their twists",
        {{"ranks", {2, 3, 4, 5, 6, 7, 8}}}, invertibles_claim);
    add("prop-d-odd-sign", "eps_{D_r}(sigma_r) = -1 for r = 5 mod 8", {{"ranks", {5, 13}}},
        prop_d_odd_sign);
    add("prop-d-even-sign", "eps_{D_r}(sigma_{2r+1}) = eps_{D_s}(sigma_{s-1}) = -1",
        {{"r_values", {4, 12}}, {"s_values", {6, 14}}}, prop_d_even_sign);
    add("prop-bd-separation", "D_r and B_{2r-1} signatures separate for r = 12 mod 80",
        {{"rank", 12}}, bd_separation);
    add("periodicity", "type-D signature depends only on k mod 4r-2", {{"rank", 4}, {"window", 300}},
        periodicity);
    add("shift-b", "eps_B(sigma_{8xb+k}) = (-1)^x eps_B(sigma_k)",
        {{"b", 3}, {"k", 1}, {"x_min", -2}, {"x_max", 3}}, shift_b);
    add("thm-independence-odd", "CRT-built sigma flips exactly the pinned odd-family coordinate",
        {{"primes", {41, 73}}}, independence_odd);
    add("thm-independence-even", "same for the two even families",
        {{"primes7", {7}}, {"primes11", {11}}}, independence_even);
    add("jacobi-conditions", "Jacobi symbol conditions for the even families",
        {{"primes", {7, 23, 11}}}, jacobi_conditions);
    add("thm-pointed-ising", "pointed and Ising classes cannot cancel the odd family",
        {{"primes", {41, 73}}, {"h1", {1, 3, 5, 15}}, {"exponents", {1, 2}}}, pointed_ising);
    add("pointed-jacobi", "sgn sigma_k(sqrt p) = (k/p) for primes p = 1 mod 4", {{"p_max", 100}},
        pointed_jacobi);
    add("ising-odd-m", "no odd m satisfies the Ising twist condition", {{"m_max", 15}}, ising_odd);
    add("signature-homomorphism", "signature of a product is the product of signatures",
        {{"count", 20}, {"seed", 20210611}, {"d_rank_max", 6}, {"b_rank_max", 4}}, homomorphism);
    add("anisotropy-d4", "D_4 has no nontrivial connected etale algebra", ordered_json::object(),
        anisotropy);
    return e;
  }();
  return entries;
}

}  // namespace

const std::vector<ClaimInfo>& list_claims() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const Entry& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Report run_claim(const std::string& id, const nlohmann::json& params, const RunConfig& config) {
  config.validate();
  for (const Entry& e : registry()) {
    if (e.info.id == id) return e.run(Params(id, e.info.defaults, params), config);
  }
  throw UsageError("unknown claim '" + id + "' (see 'wittsig verify --list')");
}

}  // namespace wittsig
