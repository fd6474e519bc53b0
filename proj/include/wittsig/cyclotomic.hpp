#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wittsig/number_theory.hpp"

namespace wittsig {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {
struct CyclotomicField;
}

/// Exact element of Q(zeta_n) with zeta_n = exp(2 pi i / n).
///
/// Stored in the power basis 1, zeta_n, ..., zeta_n^(phi(n)-1), reduced modulo
/// the n-th cyclotomic polynomial. Coefficients are integer numerators over a
/// single positive denominator with gcd(denominator, numerators) = 1, so the
/// representation at a given conductor is canonical: zero test and equality
/// are coefficient comparisons.
///
/// The conductor is kept as given. Binary operations on different conductors
/// work in Q(zeta_lcm) and do not shrink the result afterwards; see
/// minimize_conductor() for that.
class CyclotomicNumber {
 public:
  /// Zero at conductor 1.
  CyclotomicNumber();

  static CyclotomicNumber zero(i64 conductor = 1);
  static CyclotomicNumber one(i64 conductor = 1);
  static CyclotomicNumber rational(const Rational& value, i64 conductor = 1);
  static CyclotomicNumber integer(long value, i64 conductor = 1);

  /// zeta_n^power; any integer power is accepted.
  static CyclotomicNumber zeta(i64 n, i64 power = 1);

  /// sum of c * zeta_n^e over the given (e, c) terms, exponents taken mod n.
  static CyclotomicNumber from_terms(i64 n, std::span<const std::pair<i64, Rational>> terms);

  /// Power-basis coordinates; `coeffs.size()` must equal phi(n).
  static CyclotomicNumber from_coefficients(i64 n, std::span<const Rational> coeffs);

  i64 conductor() const noexcept { return conductor_; }
  std::size_t degree() const noexcept { return num_.size(); }

  Rational coefficient(std::size_t i) const;
  std::vector<Rational> coefficients() const;
  const std::vector<Integer>& numerators() const noexcept { return num_; }
  const Integer& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept;
  std::optional<Rational> as_rational() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }

  /// Equality of algebraic numbers; different conductors compare in the lcm field.
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  CyclotomicNumber scaled(const Rational& factor) const;
  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(i64 exponent) const;

  /// Multiplies by zeta_n^power at this number's conductor n (cheap rotation).
  CyclotomicNumber times_zeta_power(i64 power) const;

  /// Human-readable power-basis form, e.g. "33 + 28*z28^2 - 1/2*z28^5".
  std::string to_string() const;

 private:
  friend CyclotomicNumber embed(const CyclotomicNumber& x, i64 m);
  friend CyclotomicNumber galois_apply(i64 k, const CyclotomicNumber& x);

  CyclotomicNumber(std::shared_ptr<const detail::CyclotomicField> field, std::vector<Integer> num,
                   Integer den);

  /// Builds a canonical element from an unreduced numerator vector of any length.
  static CyclotomicNumber from_unreduced(std::shared_ptr<const detail::CyclotomicField> field,
                                         std::vector<Integer> num, Integer den);
  void normalize();

  std::shared_ptr<const detail::CyclotomicField> field_;
  i64 conductor_ = 1;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

enum class ArithOp { add, sub, mul, div };

/// Field operation at conductor lcm(n_a, n_b). Throws DivisionByZero for b == 0 with div.
CyclotomicNumber cyclo_arith(const CyclotomicNumber& a, const CyclotomicNumber& b, ArithOp op);

/// Same number represented at conductor m; n_x must divide m.
CyclotomicNumber embed(const CyclotomicNumber& x, i64 m);

/// Representation at conductor m if x lies in Q(zeta_m), otherwise nullopt.
/// m need not be a multiple or a divisor of the conductor of x.
std::optional<CyclotomicNumber> represent_at(const CyclotomicNumber& x, i64 m);

/// Smallest conductor at which x can be represented.
CyclotomicNumber minimize_conductor(const CyclotomicNumber& x);

/// sigma_k : zeta_n -> zeta_n^k, with k reduced to 1..n-1 and gcd(k, n) = 1.
class GaloisElement {
 public:
  GaloisElement(i64 k, i64 n);

  i64 k() const noexcept { return k_; }
  i64 n() const noexcept { return n_; }

  GaloisElement compose(const GaloisElement& other) const;
  static GaloisElement complex_conjugation(i64 n) { return {n - 1, n}; }

  friend bool operator==(const GaloisElement&, const GaloisElement&) = default;

 private:
  i64 k_;
  i64 n_;
};

/// sigma_k applied to x, with k read modulo the conductor of x.
/// Throws std::invalid_argument when gcd(k, n_x) != 1.
CyclotomicNumber galois_apply(i64 k, const CyclotomicNumber& x);

/// sigma applied to x; the conductor of x must divide sigma.n() (sigma is
/// then restricted to Q(zeta_{n_x})).
CyclotomicNumber galois_apply(const GaloisElement& sigma, const CyclotomicNumber& x);

CyclotomicNumber complex_conjugate(const CyclotomicNumber& x);

}  // namespace wittsig
