#include "wittsig/roots.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace wittsig {

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords2.size(); ++i) coords2[i] += o.coords2[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords2.size(); ++i) coords2[i] -= o.coords2[i];
  return *this;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords2.size(); ++i) {
    if (i) os << ",";
    const i64 c = coords2[i];
    if (c % 2 == 0) {
      os << c / 2;
    } else {
      os << c << "/2";
    }
  }
  os << ")";
  return os.str();
}

RootSystem build_root_system(RootType type, int rank) {
  if (rank < 2) throw std::invalid_argument("root system rank must be >= 2, got " + std::to_string(rank));
  RootSystem rs{type, rank, {}, Weight::zero(rank), 0};
  for (int j = 1; j <= rank; ++j) {
    for (int k = j + 1; k <= rank; ++k) {
      rs.positive_roots.push_back(unit_vector(rank, j) - unit_vector(rank, k));
      rs.positive_roots.push_back(unit_vector(rank, j) + unit_vector(rank, k));
    }
  }
  if (type == RootType::B) {
    for (int i = 1; i <= rank; ++i) rs.positive_roots.push_back(unit_vector(rank, i));
  }
  for (const auto& a : rs.positive_roots) rs.rho += a;
  for (auto& c : rs.rho.coords2) c /= 2;  // doubled(rho) = sum of roots
  rs.dual_coxeter = type == RootType::D ? 2 * rank - 2 : 2 * rank - 1;
  return rs;
}

i64 inner4(const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != mu.rank()) throw std::invalid_argument("inner: rank mismatch");
  i64 s = 0;
  for (std::size_t i = 0; i < lambda.coords2.size(); ++i) s += lambda.coords2[i] * mu.coords2[i];
  return s;
}

Rational inner(const Weight& lambda, const Weight& mu) {
  Rational q(static_cast<long>(inner4(lambda, mu)), 4);
  q.canonicalize();
  return q;
}

Weight unit_vector(int rank, int i) {
  if (i < 1 || i > rank) throw std::invalid_argument("unit vector index out of range");
  Weight w = Weight::zero(rank);
  w.coords2[static_cast<std::size_t>(i - 1)] = 2;
  return w;
}

Weight fundamental_weight_D(int rank, int j) {
  if (rank < 2 || j < 1 || j > rank) throw std::invalid_argument("fundamental weight index out of range");
  Weight w = Weight::zero(rank);
  const auto r = static_cast<std::size_t>(rank);
  if (j <= rank - 2) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(j); ++i) w.coords2[i] = 2;
    return w;
  }
  for (std::size_t i = 0; i < r; ++i) w.coords2[i] = 1;
  if (j == rank - 1) w.coords2[r - 1] = -1;
  return w;
}

bool is_dominant_D(const Weight& w) {
  const auto& c = w.coords2;
  if (c.empty()) return false;
  const bool odd = std::abs(c[0]) % 2 == 1;
  for (i64 x : c) {
    if ((std::abs(x) % 2 == 1) != odd) return false;
  }
  for (std::size_t i = 0; i + 2 < c.size(); ++i) {
    if (c[i] < c[i + 1]) return false;
  }
  return c.size() < 2 || c[c.size() - 2] >= std::abs(c.back());
}

bool in_alcove_D(const Weight& w) {
  if (w.rank() < 2 || !is_dominant_D(w)) return false;
  // for r = 2 both e1 + e2 and e1 - e2 are highest roots
  return w.coords2[0] + std::abs(w.coords2[1]) <= 4 * w.rank();
}

namespace {

// Fills positions pos.. with non-increasing values of a fixed parity.
void extend(std::vector<i64>& c, std::size_t pos, i64 bound, std::vector<Weight>& out) {
  const std::size_t r = c.size();
  const i64 parity = std::abs(c[0]) % 2;
  if (pos == r - 1) {
    // last coordinate ranges over [-c_{r-2}, c_{r-2}] with shared parity
    for (i64 x = -bound; x <= bound; ++x) {
      if (std::abs(x) % 2 != parity) continue;
      c[pos] = x;
      out.emplace_back(c);
    }
    return;
  }
  for (i64 x = parity; x <= bound; x += 2) {
    c[pos] = x;
    extend(c, pos + 1, x, out);
  }
}

}  // namespace

std::vector<Weight> alcove_D(int r) {
  if (r < 2) throw std::invalid_argument("alcove_D needs r >= 2");
  std::vector<Weight> out;
  const i64 level2 = 4 * static_cast<i64>(r);  // doubled l_1 + l_2 bound
  std::vector<i64> c(static_cast<std::size_t>(r));
  for (i64 parity = 0; parity <= 1; ++parity) {
    for (i64 c1 = parity; c1 <= level2; c1 += 2) {
      c[0] = c1;
      // c2 <= c1 and c1 + c2 <= level2 prune everything below depth 2
      const i64 bound2 = std::min(c1, level2 - c1);
      if (bound2 < parity) continue;
      if (r == 2) {
        for (i64 x = -bound2; x <= bound2; ++x) {
          if (std::abs(x) % 2 != parity) continue;
          c[1] = x;
          out.emplace_back(c);
        }
        continue;
      }
      for (i64 c2 = parity; c2 <= bound2; c2 += 2) {
        c[1] = c2;
        extend(c, 2, c2, out);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 d_count(i64 r, i64 j) {
  if (j < 1) return 0;
  if (j <= r - 1) return r - j / 2;
  if (j <= 2 * r - 3) return r - (j + 2) / 2;  // ceil((j+1)/2)
  return 0;
}

i64 d_count_bruteforce(int r, i64 j) {
  if (r < 2) return 0;
  const RootSystem rs = build_root_system(RootType::D, r);
  i64 count = 0;
  for (const auto& a : rs.positive_roots) {
    if (inner4(a, rs.rho) == 4 * j) ++count;
  }
  return count;
}

std::set<i64> s_set(i64 r) {
  std::set<i64> out;
  for (i64 j = 1; j <= 2 * r - 3; ++j) {
    if ((d_count(r, j) * j) % 2 != 0) out.insert(j);
  }
  return out;
}

i64 c_count(i64 b, i64 j) {
  if (j < 1 || j > 2 * b - 2) return 0;
  return b - (j + 1) / 2;
}

std::string alcove_json_lines(int r) {
  std::ostringstream os;
  for (const auto& w : alcove_D(r)) {
    os << "{\"coords2\":[";
    for (std::size_t i = 0; i < w.coords2.size(); ++i) os << (i ? "," : "") << w.coords2[i];
    os << "],\"level_pairing\":" << (w.coords2[0] + w.coords2[1]) / 2 << "}\n";
  }
  return os.str();
}

}  // namespace wittsig
