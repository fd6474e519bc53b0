#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wittsig {

using i64 = std::int64_t;

/// Non-negative residue of a modulo m (m > 0).
i64 mod(i64 a, i64 m);

/// lcm with overflow detection.
i64 lcm_checked(i64 a, i64 b);

i64 euler_phi(i64 n);
std::vector<std::pair<i64, int>> factorize(i64 n);
std::vector<i64> divisors(i64 n);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Jacobi symbol (a/m) for odd m >= 1. Returns 0 when gcd(a, m) > 1.
/// Throws std::invalid_argument for even or non-positive m.
int jacobi(i64 a, i64 m);

struct BezoutResult {
  i64 g;  // gcd(a, b) >= 0
  i64 x;
  i64 y;  // a*x + b*y == g
};

BezoutResult bezout(i64 a, i64 b);

struct Congruence {
  i64 residue;
  i64 modulus;

  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// Combines congruences with arbitrary (not necessarily coprime) moduli.
/// The result has modulus lcm of the inputs and residue in [0, modulus).
/// Throws std::invalid_argument if the system has no solution.
Congruence crt_solve(std::span<const Congruence> system);

/// First `count` primes p with p ≡ residue (mod modulus), ascending.
std::vector<i64> primes_in_progression(i64 residue, i64 modulus, std::size_t count);

}  // namespace wittsig
