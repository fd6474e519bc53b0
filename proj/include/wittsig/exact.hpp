#pragma once

#include <vector>

#include "wittsig/certified.hpp"
#include "wittsig/cyclotomic.hpp"

namespace wittsig {

/// sin(j pi / m) at conductor lcm(2m, 4).
CyclotomicNumber sin_pi_frac(i64 j, i64 m);

/// cos(j pi / m) at conductor 2m.
CyclotomicNumber cos_pi_frac(i64 j, i64 m);

/// Positive square root of m >= 1, built from quadratic Gauss sums and
/// zeta_8 + zeta_8^-1 for the factor 2. Conductor divides 4 * squarefree part.
CyclotomicNumber sqrt_int(i64 m);

/// Orbit of x under Gal(Q(zeta_n)/Q), n the conductor of x; first occurrence
/// order by increasing k, duplicates removed.
std::vector<CyclotomicNumber> conjugates(const CyclotomicNumber& x);

/// Norm from Q(zeta_n) to Q, n the conductor of x.
Rational algebraic_norm(const CyclotomicNumber& x);

/// Every conjugate real and certified positive. Non-real input yields false.
bool is_totally_positive(const CyclotomicNumber& x, const PrecisionSchedule& schedule = {});

/// Product scalar * prod base_i^exp_i kept unevaluated.
///
/// Signs of Galois conjugates are read off factor by factor, which avoids
/// forming large inverses; value() multiplies everything out.
class PowerProduct {
 public:
  struct Factor {
    CyclotomicNumber base;
    i64 exponent;
  };

  PowerProduct() = default;
  explicit PowerProduct(Rational scalar) : scalar_(std::move(scalar)) {}

  PowerProduct& times(CyclotomicNumber base, i64 exponent = 1);
  PowerProduct& times_scalar(const Rational& q);
  PowerProduct& times(const PowerProduct& other);

  const Rational& scalar() const noexcept { return scalar_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  /// lcm of the factor conductors (1 for a bare scalar).
  i64 conductor() const;

  CyclotomicNumber value() const;

  /// Sign of sigma_k applied to the product. Every factor must stay real and
  /// nonzero under sigma_k; k must be coprime to conductor().
  Sign galois_sign(i64 k, const PrecisionSchedule& schedule = {}) const;

 private:
  Rational scalar_ = 1;
  std::vector<Factor> factors_;
};

}  // namespace wittsig
