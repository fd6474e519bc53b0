#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "wittsig/cyclotomic.hpp"

namespace wittsig {

enum class RootType { B, D };

/// Weight in the orthonormal e-basis, stored as doubled coordinates so that
/// spin weights (half-integer entries) are exact.
struct Weight {
  std::vector<i64> coords2;

  Weight() = default;
  explicit Weight(std::vector<i64> doubled) : coords2(std::move(doubled)) {}
  static Weight zero(int rank) { return Weight(std::vector<i64>(static_cast<std::size_t>(rank))); }

  int rank() const noexcept { return static_cast<int>(coords2.size()); }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(i64 c, Weight w) {
    for (auto& x : w.coords2) x *= c;
    return w;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// e.g. "(3/2,1/2,1/2,-1/2)".
  std::string to_string() const;
};

struct RootSystem {
  RootType type;
  int rank;
  std::vector<Weight> positive_roots;
  Weight rho;
  int dual_coxeter;
};

/// Throws std::invalid_argument for rank < 2.
RootSystem build_root_system(RootType type, int rank);

/// (lambda|mu); throws std::invalid_argument on rank mismatch.
Rational inner(const Weight& lambda, const Weight& mu);

/// 4 (lambda|mu), always an integer.
i64 inner4(const Weight& lambda, const Weight& mu);

Weight unit_vector(int rank, int i);  // e_i, 1-based

/// Fundamental weight omega_j of D_r, 1 <= j <= r.
Weight fundamental_weight_D(int rank, int j);

/// Dominant for D_r: l_1 >= ... >= l_{r-1} >= |l_r|, all doubled coordinates
/// of one parity.
bool is_dominant_D(const Weight& w);

/// Fundamental alcove of so(2r) at level 2r: dominant weights with
/// l_1 + l_2 <= 2r, ascending lexicographic order of doubled coordinates.
std::vector<Weight> alcove_D(int r);

bool in_alcove_D(const Weight& w);

/// Number of positive roots alpha of D_r with (alpha|rho) = j (closed form).
i64 d_count(i64 r, i64 j);
i64 d_count_bruteforce(int r, i64 j);

/// {1 <= j <= 2r-3 : d_r(j) * j odd}
std::set<i64> s_set(i64 r);

/// b - ceil(j/2) for 1 <= j <= 2b-2, else 0.
i64 c_count(i64 b, i64 j);

/// JSON lines {"coords2":[..],"level_pairing":int}, one per alcove weight;
/// level_pairing is (lambda|e_1+e_2).
std::string alcove_json_lines(int r);

}  // namespace wittsig
