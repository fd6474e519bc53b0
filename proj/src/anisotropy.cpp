#include "wittsig/anisotropy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wittsig/parallel.hpp"

namespace wittsig {

namespace {

using nlohmann::ordered_json;

constexpr int kRank = 4;
constexpr int kDigits = 20;

Weight omega(int j) { return fundamental_weight_D(kRank, j); }

std::vector<Weight> invertibles_d4() {
  return {Weight::zero(kRank), 8 * omega(3), 8 * omega(1), 8 * omega(4)};
}

std::vector<Weight> x_weights() {
  const Weight base = 2 * omega(2);
  return {base, base + 4 * omega(1), base + 4 * omega(3), base + 4 * omega(4)};
}

std::vector<Weight> y_weights() {
  return {2 * omega(1) + omega(2) + 2 * omega(3), 2 * omega(1) + omega(2) + 2 * omega(4),
          omega(2) + 2 * omega(3) + 2 * omega(4),
          2 * omega(1) + omega(2) + 2 * omega(3) + 2 * omega(4)};
}

// c0 + c1 (z7 + z7^6) + c2 (z7^2 + z7^5) + c3 (z7^3 + z7^4), built from the
// periods of Q(zeta_7)^+.
CyclotomicNumber periods7(long c0, long c1, long c2, long c3) {
  const std::pair<i64, Rational> terms[] = {{0, c0}, {1, c1}, {6, c1}, {2, c2},
                                            {5, c2}, {3, c3}, {4, c3}};
  return CyclotomicNumber::from_terms(7, terms);
}

CyclotomicNumber expected_d1() { return periods7(33, 28, 14, 0); }
CyclotomicNumber expected_d2() { return periods7(157, 126, 56, 0); }
CyclotomicNumber expected_dim_d4() {
  return periods7(0, 269, 873, 1357).scaled(Rational(-196));
}

ordered_json weight_list(const std::vector<Weight>& ws) {
  ordered_json out = ordered_json::array();
  for (const Weight& w : ws) out.push_back(w.to_string());
  return out;
}

ordered_json exact_json(const CyclotomicNumber& x, bool factored = false) {
  ordered_json j;
  j["periods"] = period_form(x, factored);
  j["power_basis"] = minimize_conductor(x).to_string();
  j["decimal"] = decimal_string(x, kDigits);
  return j;
}

// Norm of a real element over Q(zeta_n)^+, n its minimal conductor.
Rational real_subfield_norm(const CyclotomicNumber& x) {
  const CyclotomicNumber y = minimize_conductor(x);
  const i64 n = y.conductor();
  if (n <= 2) return *y.as_rational();
  CyclotomicNumber acc = CyclotomicNumber::one(n);
  for (i64 k = 1; 2 * k < n; ++k) {
    if (std::gcd(k, n) == 1) acc *= galois_apply(k, y);
  }
  return *acc.as_rational();
}

std::string pair_string(int a1, int a2) {
  return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
}

}  // namespace

std::string period_form(const CyclotomicNumber& x, bool factored) {
  const CyclotomicNumber y = minimize_conductor(x);
  const i64 p = y.conductor();
  if (p <= 2) return y.as_rational()->get_str();
  if (p % 2 == 0 || !is_prime(static_cast<std::uint64_t>(p)) || !is_real(y)) return y.to_string();

  // Switch to the normal basis zeta, ..., zeta^(p-1): a_j = c_j - c_0.
  const std::vector<Rational> c = y.coefficients();
  const i64 h = (p - 1) / 2;
  std::vector<Rational> b(static_cast<std::size_t>(h + 1));
  for (i64 j = 1; j <= h; ++j) b[j] = c[j] - c[0];

  auto period = [p](i64 j) {
    const std::string z = "z" + std::to_string(p);
    return "(" + (j == 1 ? z : z + "^" + std::to_string(j)) + "+" + z + "^" + std::to_string(p - j) +
           ")";
  };
  auto append = [](std::string& s, const Rational& coef, const std::string& what) {
    if (sgn(coef) == 0) return;
    const Rational mag = abs(coef);
    if (s.empty()) {
      s += sgn(coef) < 0 ? "-" : "";
    } else {
      s += sgn(coef) < 0 ? " - " : " + ";
    }
    if (what.empty()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += what;
    }
  };

  std::string s;
  if (factored) {
    // Pull out the content, signed like the first nonzero coefficient.
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    Rational first = 0;
    for (i64 j = 1; j <= h; ++j) {
      if (sgn(b[j]) == 0) continue;
      if (sgn(first) == 0) first = b[j];
      num_gcd = gcd(num_gcd, b[j].get_num());
      den_lcm = lcm(den_lcm, b[j].get_den());
    }
    Rational g(num_gcd, den_lcm);
    g.canonicalize();
    if (sgn(first) < 0) g = -g;
    std::string inner;
    for (i64 j = 1; j <= h; ++j) append(inner, b[j] / g, period(j));
    return g == 1 ? inner : g.get_str() + "*[" + inner + "]";
  }
  // Eliminate the last period with sum of all periods = -1.
  append(s, -b[h], "");
  for (i64 j = 1; j < h; ++j) append(s, b[j] - b[h], period(j));
  return s.empty() ? "0" : s;
}

AnisotropyD4::AnisotropyD4(unsigned threads, PrecisionSchedule schedule)
    : threads_(threads), schedule_(schedule), c4_(build_category_data(kRank, threads)) {}

TrivialTwistCensus AnisotropyD4::trivial_twist_objects() const {
  TrivialTwistCensus out;
  out.invertibles = invertibles_d4();
  out.x_set = x_weights();
  out.y_set = y_weights();
  for (std::size_t i = 0; i < c4_.alcove.size(); ++i) {
    if (c4_.twist_exponents[i] == 0) out.found.push_back(c4_.alcove[i]);
  }
  std::vector<Weight> listed = out.invertibles;
  listed.insert(listed.end(), out.x_set.begin(), out.x_set.end());
  listed.insert(listed.end(), out.y_set.begin(), out.y_set.end());
  std::sort(listed.begin(), listed.end());
  std::vector<Weight> found = out.found;
  std::sort(found.begin(), found.end());
  out.ok = listed == found;
  return out;
}

LocalDims AnisotropyD4::local_dims() const {
  LocalDims out;
  auto qdims_of = [&](const std::vector<Weight>& ws) {
    std::vector<CyclotomicNumber> ds;
    for (const Weight& w : ws) ds.push_back(c4_.qdims[c4_.index_of(w)]);
    return ds;
  };
  const auto xs = x_weights();
  const auto ys = y_weights();
  const auto dx = qdims_of(xs);
  const auto dy = qdims_of(ys);
  out.x_share_qdim = std::all_of(dx.begin(), dx.end(), [&](const auto& d) { return d == dx[0]; });
  out.y_share_qdim = std::all_of(dy.begin(), dy.end(), [&](const auto& d) { return d == dy[0]; });
  out.d1 = minimize_conductor(dx[0]);
  out.d2 = minimize_conductor(dy[0]);
  out.dim_d4 = minimize_conductor(dim_local(c4_));

  const CyclotomicNumber e1 = expected_d1();
  const CyclotomicNumber e2 = expected_d2();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (dx[i] == e1) out.d1_witnesses.push_back(xs[i]);
  }
  for (std::size_t i = 0; i < ys.size(); ++i) {
    if (dy[i] == e2) out.d2_witnesses.push_back(ys[i]);
  }
  out.d1_matches = out.d1 == e1;
  out.d2_matches = out.d2 == e2;
  out.dim_matches = out.dim_d4 == expected_dim_d4();
  out.ok = out.x_share_qdim && out.y_share_qdim && out.d1_matches && out.d2_matches &&
           out.dim_matches;
  return out;
}

int AnisotropyD4::max_multiplicity(const CyclotomicNumber& d) const {
  const CyclotomicNumber dim = minimize_conductor(dim_local(c4_));
  const CyclotomicNumber one = CyclotomicNumber::one();
  int a = 0;
  for (;;) {
    const CyclotomicNumber next = one + d.scaled(Rational(a + 1));
    if (certified_compare(dim, next * next, schedule_) == Sign::negative) return a;
    ++a;
  }
}

CandidateBounds AnisotropyD4::candidate_bounds(const LocalDims& dims) const {
  return {max_multiplicity(dims.d1), max_multiplicity(dims.d2)};
}

std::vector<EtaleCandidate> AnisotropyD4::run_filters(const LocalDims& dims,
                                                      const CandidateBounds& bounds) const {
  std::vector<EtaleCandidate> out;
  for (int a1 = 0; a1 <= bounds.a1_max; ++a1) {
    for (int a2 = 0; a2 <= bounds.a2_max; ++a2) {
      if (a1 == 0 && a2 == 0) continue;  // the unit is the trivial algebra
      EtaleCandidate c;
      c.a1 = a1;
      c.a2 = a2;
      out.push_back(std::move(c));
    }
  }
  const CyclotomicNumber one = CyclotomicNumber::one();
  parallel_for(out.size(), threads_, [&](std::size_t i) {
    EtaleCandidate& c = out[i];
    c.dim = minimize_conductor(one + dims.d1.scaled(Rational(c.a1)) + dims.d2.scaled(Rational(c.a2)));
    c.conjugates = conjugates(c.dim);
    c.totally_positive = is_totally_positive(c.dim, schedule_);
    if (!c.totally_positive) return;
    const CyclotomicNumber ratio = dims.dim_d4 / (c.dim * c.dim);
    c.norm = real_subfield_norm(ratio);
    c.norm_integral = c.norm->get_den() == 1;
    if (*c.norm_integral) {
      c.ratio_admissible =
          ratio == one ||
          certified_compare(ratio, CyclotomicNumber::integer(2), schedule_) != Sign::negative;
    }
  });
  return out;
}

Report AnisotropyD4::report() const {
  Report rep;
  rep.claim = "anisotropy-d4";
  rep.parameters["rank"] = kRank;
  rep.parameters["twist_modulus"] = c4_.modulus;

  ordered_json expected;
  expected["trivial_twist_objects"] = 12;
  expected["d1"] = period_form(expected_d1(), false);
  expected["d2"] = period_form(expected_d2(), false);
  expected["dim_D4"] = period_form(expected_dim_d4(), true);
  expected["bounds"] = {11, 2};
  expected["totally_positive_survivors"] = {"(0,1)", "(0,2)"};
  expected["norm_integral_survivors"] = {"(0,2)"};
  expected["ratio"] = "1.459";
  expected["verdict"] = "completely anisotropic";
  rep.expected = expected;

  ordered_json computed;
  computed["assumptions"] = {
      "connected etale algebras have trivial twist, so only trivial-twist objects can occur",
      "dimensions of connected etale algebras are totally positive",
      "dim of the local module category is an algebraic integer and is 1 or >= 2"};

  const TrivialTwistCensus census = trivial_twist_objects();
  ordered_json jc;
  jc["count"] = census.found.size();
  jc["invertibles"] = weight_list(census.invertibles);
  jc["X"] = weight_list(census.x_set);
  jc["Y"] = weight_list(census.y_set);
  jc["found"] = weight_list(census.found);
  jc["ok"] = census.ok;
  computed["census"] = jc;

  const LocalDims dims = local_dims();
  ordered_json jd;
  jd["d1"] = exact_json(dims.d1);
  jd["d2"] = exact_json(dims.d2);
  jd["dim_D4"] = exact_json(dims.dim_d4, true);
  jd["X_share_qdim"] = dims.x_share_qdim;
  jd["Y_share_qdim"] = dims.y_share_qdim;
  jd["d1_witnesses"] = weight_list(dims.d1_witnesses);
  jd["d2_witnesses"] = weight_list(dims.d2_witnesses);
  ordered_json conj = ordered_json::object();
  for (const auto& [name, x] : {std::pair{"d1", dims.d1}, std::pair{"d2", dims.d2}}) {
    ordered_json list = ordered_json::array();
    for (const CyclotomicNumber& y : conjugates(x)) list.push_back(decimal_string(y, kDigits));
    conj[name] = list;
  }
  jd["conjugates"] = conj;
  jd["ok"] = dims.ok;
  computed["local_dims"] = jd;

  const CandidateBounds bounds = candidate_bounds(dims);
  computed["bounds"] = {{"a1_max", bounds.a1_max},
                        {"a2_max", bounds.a2_max},
                        {"ok", bounds.a1_max == 11 && bounds.a2_max == 2}};

  const std::vector<EtaleCandidate> cands = run_filters(dims, bounds);
  ordered_json jl = ordered_json::array();
  ordered_json tp = ordered_json::array();
  ordered_json ni = ordered_json::array();
  bool any_admissible = false;
  const EtaleCandidate* last = nullptr;
  for (const EtaleCandidate& c : cands) {
    ordered_json e;
    e["a1"] = c.a1;
    e["a2"] = c.a2;
    e["dim"] = decimal_string(c.dim, kDigits);
    e["totally_positive"] = c.totally_positive;
    e["norm"] = c.norm ? ordered_json(c.norm->get_str()) : ordered_json();
    e["norm_integral"] = c.norm_integral ? ordered_json(*c.norm_integral) : ordered_json();
    e["ratio_admissible"] = c.ratio_admissible ? ordered_json(*c.ratio_admissible) : ordered_json();
    jl.push_back(e);
    if (c.totally_positive) tp.push_back(pair_string(c.a1, c.a2));
    if (c.norm_integral.value_or(false)) {
      ni.push_back(pair_string(c.a1, c.a2));
      last = &c;
    }
    if (c.ratio_admissible.value_or(false)) any_admissible = true;
  }
  ordered_json jf;
  jf["candidate_count"] = cands.size();
  jf["totally_positive_survivors"] = tp;
  jf["norm_integral_survivors"] = ni;
  jf["ok"] = tp == expected["totally_positive_survivors"] && ni == expected["norm_integral_survivors"];
  jf["candidates"] = jl;
  computed["filters"] = jf;

  bool ratio_ok = false;
  if (last != nullptr) {
    const CyclotomicNumber ratio = dims.dim_d4 / (last->dim * last->dim);
    const bool above_one = certified_compare(ratio, CyclotomicNumber::one(), schedule_) == Sign::positive;
    const bool below_two =
        certified_compare(ratio, CyclotomicNumber::integer(2), schedule_) == Sign::negative;
    ratio_ok = above_one && below_two;
    ordered_json jr;
    jr["candidate"] = pair_string(last->a1, last->a2);
    jr["decimal"] = decimal_string(ratio, kDigits);
    jr["certified_gt_1"] = above_one;
    jr["certified_lt_2"] = below_two;
    jr["ok"] = ratio_ok;
    computed["ratio"] = jr;
  }

  rep.ok = census.ok && dims.ok && computed["bounds"]["ok"].get<bool>() && jf["ok"].get<bool>() &&
           ratio_ok && !any_admissible;
  computed["verdict"] = rep.ok ? "completely anisotropic" : "inconclusive";
  if (rep.ok) rep.note = "no nontrivial connected etale algebra survives";
  rep.computed = computed;
  return rep;
}

std::string AnisotropyD4::text_report() const {
  const ordered_json j = report().to_json();
  const ordered_json& c = j["computed"];
  std::ostringstream os;
  os << "D4 = local modules of so(8)_8, twists in mu_" << j["parameters"]["twist_modulus"].get<i64>()
     << "\n\n";
  os << "Assumptions:\n";
  for (const auto& a : c["assumptions"]) os << "  - " << a.get<std::string>() << "\n";
  os << "\n1. Trivial-twist objects (" << c["census"]["count"].get<std::size_t>() << ")\n";
  for (const char* key : {"invertibles", "X", "Y"}) {
    os << "   " << key << ":";
    for (const auto& w : c["census"][key]) os << " " << w.get<std::string>();
    os << "\n";
  }
  os << "   matches expected list: " << (c["census"]["ok"].get<bool>() ? "yes" : "NO") << "\n";

  const auto& d = c["local_dims"];
  os << "\n2. Dimensions\n";
  for (const char* key : {"d1", "d2", "dim_D4"}) {
    os << "   " << key << " = " << d[key]["periods"].get<std::string>() << "\n"
       << "      ~ " << d[key]["decimal"].get<std::string>() << "\n";
  }
  for (const char* key : {"d1", "d2"}) {
    os << "   conjugates of " << key << ":";
    for (const auto& v : d["conjugates"][key]) os << " " << v.get<std::string>();
    os << "\n";
  }
  os << "   X/Y members share qdim: " << (d["X_share_qdim"].get<bool>() ? "yes" : "NO") << "/"
     << (d["Y_share_qdim"].get<bool>() ? "yes" : "NO") << "\n";

  os << "\n3. Bounds: a1 <= " << c["bounds"]["a1_max"].get<int>()
     << ", a2 <= " << c["bounds"]["a2_max"].get<int>() << "\n";

  const auto& f = c["filters"];
  os << "\n4. Filters over " << f["candidate_count"].get<std::size_t>() << " candidates\n";
  os << "   a1 a2  dim(L)                     tot.pos  norm-int\n";
  for (const auto& e : f["candidates"]) {
    std::string dim = e["dim"].get<std::string>();
    dim.resize(26, ' ');
    os << "   " << (e["a1"].get<int>() < 10 ? " " : "") << e["a1"].get<int>() << "  "
       << e["a2"].get<int>() << "  " << dim << " " << (e["totally_positive"].get<bool>() ? "yes" : "no ")
       << "      " << (e["norm_integral"].is_null() ? "-" : e["norm_integral"].get<bool>() ? "yes" : "no")
       << "\n";
  }
  os << "   totally positive:";
  for (const auto& s : f["totally_positive_survivors"]) os << " " << s.get<std::string>();
  os << "\n   integral norm:";
  for (const auto& s : f["norm_integral_survivors"]) os << " " << s.get<std::string>();
  os << "\n";

  if (c.contains("ratio")) {
    const auto& r = c["ratio"];
    os << "\n5. dim(D4)/dim(L)^2 for L = " << r["candidate"].get<std::string>() << ": "
       << r["decimal"].get<std::string>() << "  (1 < ratio < 2 certified: "
       << (r["ok"].get<bool>() ? "yes" : "NO") << ")\n";
  }
  os << "\nVerdict: " << c["verdict"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace wittsig
