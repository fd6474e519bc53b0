#include "wittsig/signature.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "wittsig/invariants.hpp"
#include "wittsig/parallel.hpp"
#include "wittsig/roots.hpp"

namespace wittsig {

namespace {

using nlohmann::ordered_json;

std::shared_ptr<const PowerProduct> cached_product(Family family, int rank) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const PowerProduct>> cache;
  const std::pair<int, int> key{family == Family::D ? 0 : 1, rank};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto p = std::make_shared<const PowerProduct>(family == Family::D ? sqrt_dim_product_D(rank)
                                                                    : sqrt_dim_product_B(rank));
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(p)).first->second;
}

void require_coprime(i64 k, i64 n, const char* what) {
  const i64 g = std::gcd(mod(k, n), n);
  if (g != 1) {
    throw std::invalid_argument(std::string(what) + ": k = " + std::to_string(k) +
                                " is not coprime to conductor " + std::to_string(n) + " (gcd " +
                                std::to_string(g) + ")");
  }
}

int sign_int(Sign s) { return to_int(s); }

}  // namespace

i64 signature_conductor(Family family, int rank) {
  if (rank < 2) throw std::invalid_argument("rank must be >= 2");
  return family == Family::D ? 8 * static_cast<i64>(rank) - 4 : 16 * static_cast<i64>(rank);
}

Sign signature_D(int r, i64 k, const PrecisionSchedule& schedule) {
  const i64 n = signature_conductor(Family::D, r);
  require_coprime(k, n, "signature_D");
  return cached_product(Family::D, r)->galois_sign(mod(k, n), schedule);
}

Sign signature_B(int b, i64 k, const PrecisionSchedule& schedule) {
  const i64 n = signature_conductor(Family::B, b);
  require_coprime(k, n, "signature_B");
  return cached_product(Family::B, b)->galois_sign(mod(k, n), schedule);
}

Sign signature(Family family, int rank, i64 k, const PrecisionSchedule& schedule) {
  return family == Family::D ? signature_D(rank, k, schedule) : signature_B(rank, k, schedule);
}

Sign closed_form_signature_D(int r, i64 k) {
  const i64 rr = r;
  const i64 ell = 4 * rr - 2;
  require_coprime(k, 2 * ell, "closed_form_signature_D");
  const i64 kk = mod(k, 2 * ell);
  int s = 1;
  if (r % 2 == 1) s = jacobi(kk, 2 * rr - 1);
  i64 parity = 0;
  for (i64 j = 1; j <= 2 * rr - 3; ++j) {
    if (d_count(rr, j) % 2 == 1) parity += (kk * j) / ell;
  }
  if (parity % 2 == 1) s = -s;
  return sign_of(s);
}

Report check_periodicity_D(int r, i64 window, unsigned threads, const PrecisionSchedule& schedule,
                           SignatureProfile* profile) {
  Report rep;
  rep.claim = "periodicity";
  rep.parameters = {{"rank", r}, {"window", window}};
  const i64 n = signature_conductor(Family::D, r);
  const i64 period = 4 * static_cast<i64>(r) - 2;
  std::vector<i64> ks;
  for (i64 k = 1; k <= window; ++k) {
    if (std::gcd(k, n) == 1) ks.push_back(k);
  }
  std::vector<Sign> signs(ks.size());
  parallel_for(ks.size(), threads, [&](std::size_t i) { signs[i] = signature_D(r, ks[i], schedule); });

  SignatureProfile prof{Family::D, r, period, {}};
  std::vector<i64> violations;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    auto [it, fresh] = prof.classes.try_emplace(ks[i] % period, signs[i]);
    if (!fresh && it->second != signs[i]) violations.push_back(ks[i]);
  }
  ordered_json classes = ordered_json::object();
  for (const auto& [res, s] : prof.classes) classes[std::to_string(res)] = sign_int(s);
  rep.expected = {{"constant_mod", period}};
  rep.computed = {{"evaluated", ks.size()}, {"profile", classes}, {"violations", violations}};
  rep.ok = violations.empty() && !prof.classes.empty() && prof.classes.at(1) == Sign::positive;
  if (profile) *profile = std::move(prof);
  return rep;
}

Report check_shift_B(int b, i64 k, i64 x_min, i64 x_max, const PrecisionSchedule& schedule) {
  if (b % 2 == 0) throw std::invalid_argument("check_shift_B needs odd b");
  if (mod(k, 4) != 1) throw std::invalid_argument("check_shift_B needs k ≡ 1 (mod 4)");
  if (std::gcd(mod(k, b), static_cast<i64>(b)) != 1) {
    throw std::invalid_argument("check_shift_B needs gcd(k, b) = 1");
  }
  if (x_min > x_max) throw std::invalid_argument("empty x range");
  Report rep;
  rep.claim = "shift-b";
  rep.parameters = {{"b", b}, {"k", k}, {"x_min", x_min}, {"x_max", x_max}};
  const int base = sign_int(signature_B(b, k, schedule));
  ordered_json expected = ordered_json::array();
  ordered_json computed = ordered_json::array();
  rep.ok = true;
  for (i64 x = x_min; x <= x_max; ++x) {
    const i64 kp = 8 * x * b + k;
    const int want = (mod(x, 2) == 0 ? 1 : -1) * base;
    const int got = sign_int(signature_B(b, kp, schedule));
    expected.push_back({{"x", x}, {"k", kp}, {"sign", want}});
    computed.push_back({{"x", x}, {"k", kp}, {"sign", got}});
    rep.ok = rep.ok && want == got;
  }
  rep.expected = std::move(expected);
  rep.computed = std::move(computed);
  return rep;
}

Sign pointed_signature(i64 h, i64 k, const PrecisionSchedule& schedule) {
  if (h < 1) throw std::invalid_argument("pointed_signature needs h >= 1");
  // sigma_k only has to be defined on Q(sqrt h), i.e. on the conductor of
  // our representation of sqrt h (which divides 4h).
  const CyclotomicNumber root = sqrt_int(h);
  require_coprime(k, root.conductor(), "pointed_signature");
  return certified_sign(galois_apply(mod(k, root.conductor()), root), schedule);
}

i64 build_galois_element(Congruence pinned, std::span<const i64> fixed_one) {
  if (pinned.modulus <= 0) throw std::invalid_argument("pinned modulus must be positive");
  if (std::gcd(mod(pinned.residue, pinned.modulus), pinned.modulus) != 1) {
    throw std::invalid_argument("pinned residue " + std::to_string(pinned.residue) +
                                " is not a unit modulo " + std::to_string(pinned.modulus));
  }
  std::vector<Congruence> system{{mod(pinned.residue, pinned.modulus), pinned.modulus}};
  for (i64 m : fixed_one) {
    if (m <= 0) throw std::invalid_argument("fixed moduli must be positive");
    system.push_back({1, m});
  }
  // Overlapping moduli (e.g. a shared factor 2) are fine when compatible;
  // crt_solve rejects the rest.
  const Congruence c = crt_solve(system);
  return c.residue == 0 ? c.modulus : c.residue;
}

std::vector<i64> prime_sequence(i64 residue, i64 modulus, std::size_t count) {
  return primes_in_progression(residue, modulus, count);
}

namespace {

// One CRT-built Galois element and the signature vector it produces.
struct PinnedRun {
  i64 k;
  i64 k_bezout;
  std::vector<int> signs;
};

// The pinned residue is allowed to share the factor 2 with the fixed moduli;
// CRT handles the (compatible) overlap.
i64 crt_pinned(Congruence pinned, const std::vector<i64>& fixed) {
  std::vector<Congruence> system{{mod(pinned.residue, pinned.modulus), pinned.modulus}};
  for (i64 m : fixed) system.push_back({1, m});
  const Congruence c = crt_solve(system);
  return c.residue == 0 ? c.modulus : c.residue;
}

// k = -c x a + d with x a + y K = 1: the explicit element from the proofs.
i64 bezout_element(i64 a, i64 big_k, i64 c, i64 d) {
  const BezoutResult br = bezout(a, big_k);
  if (br.g != 1) throw std::logic_error("Bezout inputs not coprime");
  const __int128 k = -static_cast<__int128>(c) * br.x * a + d;
  const i64 l = lcm_checked(2 * a, big_k);
  return static_cast<i64>(((k % l) + l) % l);
}

ordered_json signs_json(const std::vector<int>& s) {
  ordered_json j = ordered_json::array();
  for (int v : s) j.push_back(v);
  return j;
}

}  // namespace

Report verify_independence_D_odd(std::span<const i64> primes, unsigned threads,
                                 const PrecisionSchedule& schedule) {
  Report rep;
  rep.claim = "thm-independence-odd";
  rep.parameters = {{"primes", std::vector<i64>(primes.begin(), primes.end())}};
  if (primes.empty()) throw std::invalid_argument("need at least one prime");
  std::vector<int> ranks;
  for (i64 a : primes) {
    if (!is_prime(static_cast<std::uint64_t>(a)) || mod(a, 16) != 9) {
      throw std::invalid_argument("odd family needs primes ≡ 9 (mod 16), got " + std::to_string(a));
    }
    ranks.push_back(static_cast<int>((a + 1) / 2));
  }
  std::vector<PinnedRun> runs(primes.size());
  for (std::size_t p = 0; p < primes.size(); ++p) {
    std::vector<i64> fixed;
    i64 big_k = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (i == p) continue;
      fixed.push_back(2 * primes[i]);
      big_k = lcm_checked(big_k, 2 * primes[i]);
    }
    const i64 r = ranks[p];
    runs[p].k = crt_pinned({r, 2 * primes[p]}, fixed);
    runs[p].k_bezout = bezout_element(primes[p], big_k, r - 1, r);
    runs[p].signs.resize(primes.size());
  }
  const std::size_t n = primes.size();
  parallel_for(n * n, threads, [&](std::size_t idx) {
    const std::size_t p = idx / n;
    const std::size_t i = idx % n;
    runs[p].signs[i] = sign_int(signature_D(ranks[i], runs[p].k, schedule));
  });
  ordered_json expected = ordered_json::array();
  ordered_json computed = ordered_json::array();
  rep.ok = true;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<int> want(n, 1);
    want[p] = -1;
    // both constructions agree on the residues that matter
    const bool same_class = mod(runs[p].k - runs[p].k_bezout, 2 * primes[p]) == 0;
    expected.push_back({{"pinned", primes[p]}, {"signs", signs_json(want)}});
    computed.push_back({{"pinned", primes[p]},
                        {"k", runs[p].k},
                        {"k_bezout", runs[p].k_bezout},
                        {"signs", signs_json(runs[p].signs)}});
    rep.ok = rep.ok && want == runs[p].signs && same_class;
  }
  rep.expected = std::move(expected);
  rep.computed = std::move(computed);
  rep.note = "finite instance of an infinite statement";
  return rep;
}

Report verify_independence_D_even(std::span<const i64> primes7, std::span<const i64> primes11,
                                  unsigned threads, const PrecisionSchedule& schedule) {
  Report rep;
  rep.claim = "thm-independence-even";
  rep.parameters = {{"primes7", std::vector<i64>(primes7.begin(), primes7.end())},
                    {"primes11", std::vector<i64>(primes11.begin(), primes11.end())}};
  struct Member {
    i64 prime;
    int rank;
    i64 pinned_residue;
    i64 bezout_c;  // k = -c x p + d
    i64 bezout_d;
  };
  std::vector<Member> members;
  for (i64 b : primes7) {
    if (!is_prime(static_cast<std::uint64_t>(b)) || mod(b, 16) != 7) {
      throw std::invalid_argument("expected a prime ≡ 7 (mod 16), got " + std::to_string(b));
    }
    const i64 r = (b + 1) / 2;
    members.push_back({b, static_cast<int>(r), 2 * r + 1, 2 * r, 2 * r + 1});
  }
  for (i64 c : primes11) {
    if (!is_prime(static_cast<std::uint64_t>(c)) || mod(c, 16) != 11) {
      throw std::invalid_argument("expected a prime ≡ 11 (mod 16), got " + std::to_string(c));
    }
    const i64 s = (c + 1) / 2;
    members.push_back({c, static_cast<int>(s), s - 1, s - 2, s - 1});
  }
  if (members.empty()) throw std::invalid_argument("need at least one prime");
  const std::size_t n = members.size();
  std::vector<PinnedRun> runs(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<i64> fixed;
    i64 big_k = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == p) continue;
      fixed.push_back(2 * members[i].prime);
      big_k = lcm_checked(big_k, 2 * members[i].prime);
    }
    const Member& m = members[p];
    runs[p].k = crt_pinned({m.pinned_residue, 2 * m.prime}, fixed);
    runs[p].k_bezout = bezout_element(m.prime, big_k, m.bezout_c, m.bezout_d);
    runs[p].signs.resize(n);
  }
  parallel_for(n * n, threads, [&](std::size_t idx) {
    const std::size_t p = idx / n;
    const std::size_t i = idx % n;
    runs[p].signs[i] = sign_int(signature_D(members[i].rank, runs[p].k, schedule));
  });
  ordered_json expected = ordered_json::array();
  ordered_json computed = ordered_json::array();
  rep.ok = true;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<int> want(n, 1);
    want[p] = -1;
    const bool same_class = mod(runs[p].k - runs[p].k_bezout, 2 * members[p].prime) == 0;
    expected.push_back({{"pinned", members[p].prime}, {"signs", signs_json(want)}});
    computed.push_back({{"pinned", members[p].prime},
                        {"rank", members[p].rank},
                        {"k", runs[p].k},
                        {"k_bezout", runs[p].k_bezout},
                        {"signs", signs_json(runs[p].signs)}});
    rep.ok = rep.ok && want == runs[p].signs && same_class;
  }
  rep.expected = std::move(expected);
  rep.computed = std::move(computed);
  rep.note = "finite instance of an infinite statement";
  return rep;
}

Report verify_BD_separation(int r, const PrecisionSchedule& schedule) {
  const i64 rr = r;
  const i64 b = 2 * rr - 1;
  if (mod(rr, 80) != 12) throw std::invalid_argument("verify_BD_separation needs r ≡ 12 (mod 80)");
  if (!is_prime(static_cast<std::uint64_t>(b))) {
    throw std::invalid_argument("verify_BD_separation needs 2r - 1 prime");
  }
  Report rep;
  rep.claim = "prop-bd-separation";
  rep.parameters = {{"r", r}, {"b", b}};
  const i64 k = rr - 3;
  const bool coprime = std::gcd(k, signature_conductor(Family::D, r)) == 1 &&
                       std::gcd(k, signature_conductor(Family::B, static_cast<int>(b))) == 1;
  const int d_side = sign_int(signature_D(r, k, schedule));
  const int b0 = sign_int(signature_B(static_cast<int>(b), k, schedule));
  const int b1 = sign_int(signature_B(static_cast<int>(b), 8 * b + k, schedule));
  rep.expected = {{"k", k}, {"coprime", true}, {"eps_D", 1}, {"eps_B", {1, -1}}};
  rep.computed = {{"k", k}, {"coprime", coprime}, {"eps_D", d_side}, {"eps_B", {b0, b1}}};
  rep.ok = coprime && d_side == 1 && b0 == 1 && b1 == -1;
  return rep;
}

bool ising_obstruction(i64 m, i64 ell) { return mod(m + 2 * ell, 16) == 0; }

Report verify_jacobi_conditions(std::span<const i64> primes) {
  Report rep;
  rep.claim = "jacobi-conditions";
  rep.parameters = {{"primes", std::vector<i64>(primes.begin(), primes.end())}};
  ordered_json computed = ordered_json::array();
  ordered_json expected = ordered_json::array();
  rep.ok = !primes.empty();
  for (i64 p : primes) {
    ordered_json row = {{"p", p}};
    bool good = is_prime(static_cast<std::uint64_t>(p));
    if (mod(p, 16) == 7) {
      const i64 r = (p + 1) / 2;
      row["family"] = "r";
      row["rank"] = r;
      row["k"] = 2 * r + 1;
      row["k_mod_4"] = mod(2 * r + 1, 4);
      row["jacobi"] = jacobi(2 * r + 1, 2 * r - 1);
      row["jacobi_2_p"] = jacobi(2, p);
      good = good && mod(2 * r + 1, 4) == 1 && jacobi(2 * r + 1, 2 * r - 1) == 1 && jacobi(2, p) == 1;
    } else if (mod(p, 16) == 11) {
      const i64 s = (p + 1) / 2;
      row["family"] = "s";
      row["rank"] = s;
      row["k"] = s - 1;
      row["k_mod_4"] = mod(s - 1, 4);
      row["jacobi"] = jacobi(s - 1, 2 * s - 1);
      good = good && mod(s - 1, 4) == 1 && jacobi(s - 1, 2 * s - 1) == 1;
    } else {
      row["family"] = "none";
      good = false;
    }
    expected.push_back({{"p", p}, {"k_mod_4", 1}, {"jacobi", 1}});
    computed.push_back(std::move(row));
    rep.ok = rep.ok && good;
  }
  rep.expected = std::move(expected);
  rep.computed = std::move(computed);
  return rep;
}

Report verify_pointed_ising(std::span<const i64> primes, std::span<const i64> h1_values,
                            std::span<const int> exponents, const PrecisionSchedule& schedule) {
  Report rep;
  rep.claim = "thm-pointed-ising";
  rep.parameters = {{"primes", std::vector<i64>(primes.begin(), primes.end())},
                    {"h1", std::vector<i64>(h1_values.begin(), h1_values.end())},
                    {"s", std::vector<int>(exponents.begin(), exponents.end())}};
  if (primes.empty()) throw std::invalid_argument("need at least one prime");
  for (i64 a : primes) {
    if (!is_prime(static_cast<std::uint64_t>(a)) || mod(a, 16) != 9) {
      throw std::invalid_argument("odd family needs primes ≡ 9 (mod 16), got " + std::to_string(a));
    }
  }
  ordered_json computed = ordered_json::array();
  rep.ok = true;
  const i64 a = primes[0];
  const i64 r = (a + 1) / 2;
  for (i64 h1 : h1_values) {
    if (h1 < 1 || h1 % 2 == 0 || std::gcd(h1, a) != 1) {
      throw std::invalid_argument("h1 must be odd, positive and coprime to the pinned prime");
    }
    for (int s : exponents) {
      if (s < 1) throw std::invalid_argument("exponent s must be >= 1");
      // k ≡ 1 (mod 4) is implied by the explicit Bezout element; add it here
      std::vector<i64> fixed{4 * h1};
      for (std::size_t i = 1; i < primes.size(); ++i) fixed.push_back(2 * primes[i]);
      const i64 k = crt_pinned({r, 2 * a}, fixed);
      int eps_d = 1;
      for (i64 p : primes) eps_d *= sign_int(signature_D(static_cast<int>((p + 1) / 2), k, schedule));
      i64 h = h1;
      for (int t = 0; t < s; ++t) h *= a;
      const int eps_l = sign_int(pointed_signature(h, k, schedule));
      computed.push_back({{"h1", h1}, {"s", s}, {"k", k}, {"eps_D", eps_d}, {"eps_L", eps_l}});
      rep.ok = rep.ok && eps_d == -1 && eps_l == 1;
    }
  }
  bool ising_ok = true;
  for (i64 m = 1; m < 16; m += 2) {
    for (i64 ell = 0; ell < 8; ++ell) ising_ok = ising_ok && !ising_obstruction(m, ell);
  }
  rep.expected = {{"eps_D", -1}, {"eps_L", 1}, {"odd_m_ising_trivial", false}};
  rep.computed = {{"runs", std::move(computed)}, {"odd_m_ising_trivial", !ising_ok}};
  rep.ok = rep.ok && ising_ok;
  return rep;
}

}  // namespace wittsig
