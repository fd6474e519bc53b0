#include "wittsig/number_theory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wittsig {

i64 mod(i64 a, i64 m) {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 lcm_checked(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  __int128 l = static_cast<__int128>(a / std::gcd(a, b)) * b;
  if (l > std::numeric_limits<i64>::max()) throw std::overflow_error("lcm overflows 64 bits");
  return static_cast<i64>(l);
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n <= 0) throw std::invalid_argument("factorize expects a positive integer");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

i64 euler_phi(i64 n) {
  i64 result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t size = out.size();
    i64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // This witness set is deterministic below 3.3 * 10^24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int jacobi(i64 a, i64 m) {
  if (m <= 0 || m % 2 == 0) {
    throw std::invalid_argument("jacobi symbol needs an odd positive modulus, got " +
                                std::to_string(m));
  }
  i64 x = mod(a, m);
  i64 y = m;
  int result = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const i64 r = y % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, y);
    if (x % 4 == 3 && y % 4 == 3) result = -result;
    x %= y;
  }
  return y == 1 ? result : 0;
}

BezoutResult bezout(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Congruence crt_solve(std::span<const Congruence> system) {
  Congruence acc{0, 1};
  for (const Congruence& c : system) {
    if (c.modulus <= 0) throw std::invalid_argument("congruence modulus must be positive");
    const i64 r = mod(c.residue, c.modulus);
    const BezoutResult br = bezout(acc.modulus, c.modulus);
    const i64 diff = r - acc.residue;
    if (diff % br.g != 0) {
      throw std::invalid_argument("incompatible congruences: x ≡ " + std::to_string(acc.residue) +
                                  " (mod " + std::to_string(acc.modulus) + ") and x ≡ " +
                                  std::to_string(r) + " (mod " + std::to_string(c.modulus) + ")");
    }
    const i64 l = lcm_checked(acc.modulus, c.modulus);
    const i64 step = c.modulus / br.g;
    // acc.residue + acc.modulus * t with t ≡ (diff / g) * x (mod step)
    const __int128 t = static_cast<__int128>(mod(diff / br.g, step)) * mod(br.x, step) % step;
    const __int128 value = acc.residue + static_cast<__int128>(acc.modulus) * t;
    acc = {static_cast<i64>(value % l), l};
  }
  return acc;
}

std::vector<i64> primes_in_progression(i64 residue, i64 modulus, std::size_t count) {
  if (modulus <= 0) throw std::invalid_argument("progression modulus must be positive");
  if (std::gcd(mod(residue, modulus), modulus) != 1) {
    throw std::invalid_argument("progression " + std::to_string(residue) + " mod " +
                                std::to_string(modulus) + " is not coprime");
  }
  std::vector<i64> out;
  for (i64 p = mod(residue, modulus); out.size() < count; p += modulus) {
    if (p > 1 && is_prime(static_cast<std::uint64_t>(p))) out.push_back(p);
  }
  return out;
}

}  // namespace wittsig
