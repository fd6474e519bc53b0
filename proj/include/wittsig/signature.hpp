#pragma once

#include <map>
#include <span>
#include <vector>

#include "wittsig/certified.hpp"
#include "wittsig/number_theory.hpp"
#include "wittsig/report.hpp"

namespace wittsig {

enum class Family { D, B };

/// Conductor of the exact representation of the positive square root of the
/// global dimension: 8r - 4 for D_r, 16b for B_b.
i64 signature_conductor(Family family, int rank);

/// sgn(sigma_k(D_r)). Throws std::invalid_argument (with the gcd) when k is not
/// coprime to 8r - 4.
Sign signature_D(int r, i64 k, const PrecisionSchedule& schedule = {});

/// sgn(sigma_k(B_b)); k must be coprime to 16b.
Sign signature_B(int b, i64 k, const PrecisionSchedule& schedule = {});

Sign signature(Family family, int rank, i64 k, const PrecisionSchedule& schedule = {});

/// Same sign from the floor-sum formula: [r odd] (k / 2r-1) times
/// (-1)^(sum over j with d_r(j) odd of floor(kj / (4r-2))). Cross-check only.
Sign closed_form_signature_D(int r, i64 k);

/// Signs on the unit residues modulo 4r - 2 (type D).
struct SignatureProfile {
  Family family = Family::D;
  int rank = 0;
  i64 modulus = 0;
  std::map<i64, Sign> classes;
};

/// Evaluates every coprime k in [1, window] and checks that the sign depends
/// only on k mod 4r - 2.
Report check_periodicity_D(int r, i64 window, unsigned threads = 1,
                           const PrecisionSchedule& schedule = {},
                           SignatureProfile* profile = nullptr);

/// eps(sigma_{8xb+k}) = (-1)^x eps(sigma_k) for x in [x_min, x_max].
/// Requires odd b, k ≡ 1 (mod 4) and gcd(k, b) = 1.
Report check_shift_B(int b, i64 k, i64 x_min, i64 x_max,
                     const PrecisionSchedule& schedule = {});

/// sgn(sigma_k(sqrt h)); k must be coprime to the conductor of Q(sqrt h)
/// as represented by sqrt_int (a divisor of 4h), e.g. k = 2 is fine for h = 5.
Sign pointed_signature(i64 h, i64 k, const PrecisionSchedule& schedule = {});

/// Smallest positive k with k ≡ pinned (mod pinned.modulus) and k ≡ 1 modulo
/// every fixed modulus. The moduli may overlap as long as the system is
/// consistent; the pinned residue must be a unit. Throws std::invalid_argument
/// otherwise.
i64 build_galois_element(Congruence pinned, std::span<const i64> fixed_one);

std::vector<i64> prime_sequence(i64 residue, i64 modulus, std::size_t count);

/// Odd family: primes a ≡ 9 (mod 16), r = (a + 1) / 2. For every pinned index
/// builds k ≡ r (mod 2a), k ≡ 1 (mod 2a') for the others, and checks that the
/// signature vector is -1 exactly at the pinned index.
Report verify_independence_D_odd(std::span<const i64> primes, unsigned threads = 1,
                                 const PrecisionSchedule& schedule = {});

/// Even families: primes b ≡ 7 (mod 16) give r = (b+1)/2 pinned by
/// k ≡ 2r + 1 (mod 2b); primes c ≡ 11 (mod 16) give s = (c+1)/2 pinned by
/// k ≡ s - 1 (mod 2c). All members of both families share one vector.
Report verify_independence_D_even(std::span<const i64> primes7, std::span<const i64> primes11,
                                  unsigned threads = 1, const PrecisionSchedule& schedule = {});

/// r ≡ 12 (mod 80), b = 2r - 1 prime: eps_D(sigma_{r-3}) = 1 and
/// eps_B(sigma_{8xb+r-3}) = (-1)^x for x = 0, 1.
Report verify_BD_separation(int r, const PrecisionSchedule& schedule = {});

/// True iff exp(2 pi i (m + 2 ell) / 16) = 1.
bool ising_obstruction(i64 m, i64 ell);

/// For each prime p ≡ 7 (mod 16), r = (p+1)/2: 2r+1 ≡ 1 (mod 4) and
/// (2r+1 / 2r-1) = (2 / p) = 1. For p ≡ 11 (mod 16), s = (p+1)/2:
/// s-1 ≡ 1 (mod 4) and (s-1 / 2s-1) = 1. Other residues fail.
Report verify_jacobi_conditions(std::span<const i64> primes);

/// Pointed part of the intersection argument for the odd family: with
/// k ≡ r (mod 2a), k ≡ 1 (mod 4 h1 * lcm of the other 2a'), checks
/// eps_D(sigma_k) = -1 on the product while sgn(sigma_k(sqrt(h1 a^s))) = +1,
/// and that odd m never satisfies the Ising condition.
Report verify_pointed_ising(std::span<const i64> primes, std::span<const i64> h1_values,
                            std::span<const int> exponents, const PrecisionSchedule& schedule = {});

}  // namespace wittsig
