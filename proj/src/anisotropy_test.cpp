#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wittsig/anisotropy.hpp"
#include "wittsig/certified.hpp"

using namespace wittsig;

namespace {

constexpr long double pi = std::numbers::pi_v<long double>;
constexpr int kRank = 4;
constexpr i64 kKappa = 14;  // level 8 plus dual Coxeter number 6

i64 dot(const std::vector<i64>& a, const std::vector<i64>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), i64{0});
}

const std::vector<i64> kRho2{6, 4, 2, 0};

// sigma_k of the quantum dimension of a doubled D_4 weight, in long double.
long double qdim_k(const std::vector<i64>& c, i64 k) {
  std::vector<i64> shifted(kRank);
  for (int i = 0; i < kRank; ++i) shifted[i] = c[i] + kRho2[i];
  long double d = 1;
  for (const auto& a : oracle::d_positive_roots(kRank)) {
    d *= std::sin(pi * static_cast<long double>(k * dot(shifted, a)) / (4 * kKappa)) /
         std::sin(pi * static_cast<long double>(k * dot(kRho2, a)) / (4 * kKappa));
  }
  return d;
}

// sigma_k(dim C_4 / 16).
long double dim_d4_k(i64 k) {
  long double s = 0;
  for (const auto& c : oracle::d_alcove(kRank)) s += qdim_k(c, k) * qdim_k(c, k);
  return s / 16;
}

// 1, 3, 5 represent Gal(Q(zeta_7)^+ / Q) inside (Z/28)^*.
constexpr i64 kReps[] = {1, 3, 5};

bool near(long double x, long double y, long double rel) {
  return std::abs(x - y) <= rel * std::max(1.0L, std::abs(y));
}

std::vector<i64> coords(const Weight& w) { return {w.coords2.begin(), w.coords2.end()}; }

const AnisotropyD4& pipeline() {
  static const AnisotropyD4 a(2);
  return a;
}

}  // namespace

TEST_CASE("trivial-twist census") {
  // (l|l+2rho) / 28 integral  <=>  (c|c+2rho2) divisible by 112
  std::set<std::vector<i64>> want;
  for (const auto& c : oracle::d_alcove(kRank)) {
    std::vector<i64> twice(kRank);
    for (int i = 0; i < kRank; ++i) twice[i] = c[i] + 2 * kRho2[i];
    if (dot(c, twice) % (8 * kKappa) == 0) want.insert(c);
  }
  CHECK(want.size() == 12);

  const TrivialTwistCensus census = pipeline().trivial_twist_objects();
  CHECK(census.ok);
  std::set<std::vector<i64>> got;
  for (const Weight& w : census.found) got.insert(coords(w));
  CHECK(got == want);
  CHECK(census.invertibles.size() == 4);
  CHECK(census.x_set.size() == 4);
  CHECK(census.y_set.size() == 4);
  // doubled coordinates: X holds (2,2,0,0) and (4,4,2,-2), Y holds (5,3,2,0) and (4,2,1,-1)
  auto has = [](const std::vector<Weight>& v, std::vector<i64> c) {
    return std::find(v.begin(), v.end(), Weight(std::move(c))) != v.end();
  };
  CHECK(has(census.x_set, {4, 4, 0, 0}));
  CHECK(has(census.x_set, {8, 8, 4, -4}));
  CHECK(has(census.y_set, {10, 6, 4, 0}));
  CHECK(has(census.y_set, {8, 4, 2, -2}));
  CHECK_FALSE(has(census.x_set, {8, 4, 2, -2}));

  // recomputing from scratch gives the same census
  const TrivialTwistCensus again = AnisotropyD4(1).trivial_twist_objects();
  CHECK(again.found == census.found);
  CHECK(again.x_set == census.x_set);
}

TEST_CASE("local dimensions: exact identities and numeric conjugates") {
  const LocalDims dims = pipeline().local_dims();
  CHECK(dims.ok);
  CHECK(dims.d1_matches);
  CHECK(dims.d2_matches);
  CHECK(dims.dim_matches);
  CHECK(dims.x_share_qdim);
  CHECK(dims.y_share_qdim);
  CHECK(dims.d1_witnesses.size() == 4);
  CHECK(dims.d2_witnesses.size() == 4);

  const std::vector<i64> x{4, 4, 0, 0}, y{8, 4, 2, -2};
  for (i64 k : kReps) {
    CHECK(near(oracle::eval(galois_apply(k, dims.d1)).real(), qdim_k(x, k), 1e-12L));
    CHECK(near(oracle::eval(galois_apply(k, dims.d2)).real(), qdim_k(y, k), 1e-12L));
    CHECK(near(oracle::eval(galois_apply(k, dims.dim_d4)).real(), dim_d4_k(k), 1e-12L));
  }
  CHECK(std::abs(qdim_k(x, 1) - 61.6848L) < 1e-3L);
  CHECK(std::abs(qdim_k(y, 1) - 289.197L) < 1e-3L);
  CHECK(std::abs(dim_d4_k(1) - 489669.4548L) < 1e-3L);
  std::vector<long double> conj{qdim_k(x, 3), qdim_k(x, 5)};
  std::sort(conj.begin(), conj.end());
  CHECK(std::abs(conj[0] - -4.688L) < 1e-3L);
  CHECK(std::abs(conj[1] - 0.00346L) < 1e-5L);
}

TEST_CASE("multiplicity bounds") {
  const AnisotropyD4& a = pipeline();
  const LocalDims dims = a.local_dims();
  const CandidateBounds b = a.candidate_bounds(dims);
  CHECK(b.a1_max == 11);
  CHECK(b.a2_max == 2);
  const long double dim = dim_d4_k(1);
  const long double d1 = qdim_k({4, 4, 0, 0}, 1), d2 = qdim_k({8, 4, 2, -2}, 1);
  CHECK((1 + 11 * d1) * (1 + 11 * d1) <= dim);
  CHECK((1 + 12 * d1) * (1 + 12 * d1) > dim);
  CHECK((1 + 2 * d2) * (1 + 2 * d2) <= dim);
  CHECK((1 + 3 * d2) * (1 + 3 * d2) > dim);
  CHECK(a.max_multiplicity(dims.dim_d4) == 0);
}

TEST_CASE("candidate filters") {
  const AnisotropyD4& a = pipeline();
  const LocalDims dims = a.local_dims();
  const std::vector<EtaleCandidate> cands = a.run_filters(dims, a.candidate_bounds(dims));
  CHECK(cands.size() == 35);

  const std::vector<i64> x{4, 4, 0, 0}, y{8, 4, 2, -2};
  std::vector<std::pair<int, int>> positive, integral;
  for (const EtaleCandidate& c : cands) {
    CAPTURE(c.a1);
    CAPTURE(c.a2);
    bool tp = true;
    long double norm = 1;
    for (i64 k : kReps) {
      const long double v = 1 + c.a1 * qdim_k(x, k) + c.a2 * qdim_k(y, k);
      tp = tp && v > 0;
      norm *= dim_d4_k(k) / (v * v);
    }
    CHECK(c.totally_positive == tp);
    if (tp) {
      positive.emplace_back(c.a1, c.a2);
      REQUIRE(c.norm.has_value());
      CHECK(near(c.norm->get_d(), norm, 1e-9L));
    } else {
      // rejected early: absent from every later stage
      CHECK_FALSE(c.norm.has_value());
      CHECK_FALSE(c.norm_integral.has_value());
      CHECK_FALSE(c.ratio_admissible.has_value());
    }
    if (c.norm_integral.value_or(false)) integral.emplace_back(c.a1, c.a2);
    else CHECK_FALSE(c.ratio_admissible.has_value());
  }
  CHECK(positive == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  CHECK(integral == std::vector<std::pair<int, int>>{{0, 2}});
  const auto it = std::find_if(cands.begin(), cands.end(), [](const auto& c) { return c.a2 == 2 && c.a1 == 0; });
  REQUIRE(it != cands.end());
  CHECK(it->norm == Rational(3136));
  REQUIRE(it->ratio_admissible.has_value());
  CHECK_FALSE(*it->ratio_admissible);
}

TEST_CASE("report and verdict") {
  const Report rep = pipeline().report();
  CHECK(rep.ok);
  const auto j = rep.to_json();
  CHECK(j["computed"]["verdict"] == "completely anisotropic");
  CHECK(j["computed"]["ratio"]["ok"] == true);
  const long double ratio = dim_d4_k(1) / std::pow(1 + 2 * qdim_k({8, 4, 2, -2}, 1), 2.0L);
  CHECK(std::abs(ratio - 1.459L) < 1e-3L);
  CHECK(std::abs(std::stold(j["computed"]["ratio"]["decimal"].get<std::string>()) - ratio) < 1e-12L);
  CHECK(j["computed"]["local_dims"]["dim_D4"]["periods"] ==
        "-196*[269*(z7+z7^6) + 873*(z7^2+z7^5) + 1357*(z7^3+z7^4)]");

  // byte-identical across runs and thread counts
  CHECK(AnisotropyD4(1).report().to_json().dump() == j.dump());
  CHECK(AnisotropyD4(4).report().to_json().dump() == j.dump());

  const std::string text = pipeline().text_report();
  CHECK(text.find("Verdict: completely anisotropic") != std::string::npos);
}

TEST_CASE("period forms") {
  auto z = [](i64 e) { return CyclotomicNumber::zeta(7, e); };
  const CyclotomicNumber d1 = CyclotomicNumber::integer(33) + (z(1) + z(6)).scaled(28) + (z(2) + z(5)).scaled(14);
  CHECK(period_form(d1, false) == "33 + 28*(z7+z7^6) + 14*(z7^2+z7^5)");
  CHECK(period_form(CyclotomicNumber::integer(5), false) == "5");
  // the basis is 1 and the first two periods; the third is -1 minus the others
  CHECK(period_form(z(3) + z(4), false) == "-1 - (z7+z7^6) - (z7^2+z7^5)");
  // a representation at a multiple of 7 is read in Q(zeta_7)
  CHECK(period_form(embed(d1, 28), false) == period_form(d1, false));
}
