#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "oracles.hpp"
#include "wittsig/invariants.hpp"
#include "wittsig/roots.hpp"

using namespace wittsig;

namespace {

// (alpha|rho) for a doubled D_r root vector, rho = (r-1, ..., 1, 0).
i64 height(const std::vector<i64>& alpha2, int r) {
  i64 s = 0;
  for (int i = 0; i < r; ++i) s += alpha2[i] * (r - 1 - i);
  return s / 2;
}

// Long positive roots of B_b with (alpha|rho) = j, rho = (b-1/2, ..., 1/2):
// e_i - e_j has height j - i, e_i + e_j has height 2b + 1 - i - j.
i64 c_oracle(i64 b, i64 j) {
  i64 n = 0;
  for (i64 x = 1; x <= b; ++x) {
    for (i64 y = x + 1; y <= b; ++y) {
      if (y - x == j) ++n;
      if (2 * b + 1 - x - y == j) ++n;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("root systems") {
  const RootSystem d4 = build_root_system(RootType::D, 4);
  CHECK(d4.positive_roots.size() == 12);
  CHECK(d4.rho == Weight({6, 4, 2, 0}));
  CHECK(d4.rho.to_string() == "(3,2,1,0)");
  const RootSystem d2 = build_root_system(RootType::D, 2);
  std::set<Weight> d2roots(d2.positive_roots.begin(), d2.positive_roots.end());
  CHECK(d2roots == std::set<Weight>{Weight({2, -2}), Weight({2, 2})});
  CHECK(build_root_system(RootType::B, 3).positive_roots.size() == 9);
  CHECK(build_root_system(RootType::D, 7).dual_coxeter == 12);
  CHECK_THROWS_AS(build_root_system(RootType::D, 1), std::invalid_argument);
}

TEST_CASE("inner products") {
  const Weight e1 = unit_vector(4, 1);
  CHECK(inner(e1, e1) == 1);
  CHECK(inner(fundamental_weight_D(4, 4), fundamental_weight_D(4, 4)) == 1);
  const Weight rho = build_root_system(RootType::D, 4).rho;
  CHECK(inner(2 * e1, 2 * e1 + 2 * rho) == 16);
  CHECK(inner4(2 * e1, 2 * e1 + 2 * rho) == 64);
  CHECK(fundamental_weight_D(5, 4).to_string() == "(1/2,1/2,1/2,1/2,-1/2)");
}

TEST_CASE("alcove enumeration agrees with an independent recursion") {
  for (int r = 2; r <= 5; ++r) {
    const auto got = alcove_D(r);
    auto want = oracle::d_alcove(r);
    std::vector<Weight> ws;
    for (auto& v : want) ws.emplace_back(v);
    std::sort(ws.begin(), ws.end());
    CHECK(got == ws);
  }
  CHECK(alcove_D(2).size() == 25);
  CHECK(alcove_D(3).size() == 84);
  CHECK(alcove_D(4).size() == 295);
}

TEST_CASE("alcove weights are dominant, one parity, within the level") {
  for (int r = 2; r <= 6; ++r) {
    const auto a = alcove_D(r);
    CHECK(std::is_sorted(a.begin(), a.end()));
    CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
    for (const Weight& w : a) {
      CHECK(is_dominant_D(w));
      CHECK(in_alcove_D(w));
      const auto& c = w.coords2;
      CHECK(c[0] + c[1] <= 4 * r);
      for (i64 x : c) CHECK(((x - c[0]) % 2) == 0);
    }
  }
  CHECK_FALSE(in_alcove_D(Weight({9, 8, 0, 0})));
  CHECK_FALSE(in_alcove_D(Weight({8, -8})));  // D2: e1 - e2 bounds the level too
  CHECK(in_alcove_D(Weight({4, -4})));
  CHECK_FALSE(is_dominant_D(Weight({1, 2, 0})));
  CHECK_FALSE(is_dominant_D(Weight({2, 1, 0})));
}

TEST_CASE("d_r(j): closed form, brute force, independent root list") {
  for (int r = 2; r <= 50; ++r) {
    i64 total = 0;
    std::vector<i64> by_height(static_cast<std::size_t>(2 * r + 2), 0);
    for (const auto& a : oracle::d_positive_roots(r)) ++by_height[height(a, r)];
    for (i64 j = 1; j <= 2 * r; ++j) {
      REQUIRE(d_count(r, j) == d_count_bruteforce(r, j));
      REQUIRE(d_count(r, j) == (j < 2 * r + 2 ? by_height[j] : 0));
      total += d_count(r, j);
    }
    CHECK(total == r * (r - 1));
    CHECK(d_count(r, 2 * r - 2) == 0);
  }
  CHECK(d_count(4, 1) == 4);
  CHECK(d_count(4, 4) == 1);
}

TEST_CASE("S_r has even size") {
  CHECK(s_set(1).empty());
  for (i64 r = 1; r <= 200; ++r) {
    std::set<i64> want;
    for (i64 j = 1; j <= 2 * r - 3; ++j) {
      if ((d_count(r, j) * j) % 2 == 1) want.insert(j);
    }
    REQUIRE(s_set(r) == want);
    CHECK(want.size() % 2 == 0);
  }
}

TEST_CASE("c_b(j) against a root count") {
  CHECK(c_count(3, 1) == 2);
  for (i64 b = 2; b <= 20; ++b) {
    CHECK(c_count(b, 2 * b - 2) == 1);
    for (i64 j = 1; j <= 2 * b - 2; ++j) REQUIRE(c_count(b, j) == c_oracle(b, j));
  }
}

TEST_CASE("invertible weights lie in the alcove") {
  for (int r = 2; r <= 8; ++r) {
    const auto alcove = alcove_D(r);
    for (const InvertibleDatum& d : invertible_data(r)) {
      CHECK(in_alcove_D(d.weight));
      CHECK(std::binary_search(alcove.begin(), alcove.end(), d.weight));
    }
  }
}

TEST_CASE("alcove JSON lines") {
  std::istringstream in(alcove_json_lines(2));
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["coords2"].size() == 2);
    CHECK(j["level_pairing"].get<int>() <= 4);
    ++n;
  }
  CHECK(n == 25);
}
