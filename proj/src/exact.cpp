#include "wittsig/exact.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "linear_algebra.hpp"
#include "wittsig/errors.hpp"

namespace wittsig {

CyclotomicNumber sin_pi_frac(i64 j, i64 m) {
  if (m < 1) throw std::invalid_argument("sin_pi_frac needs m >= 1");
  const i64 n = lcm_checked(2 * m, 4);
  const i64 e = mod(j * (n / (2 * m)), n);  // zeta_n^e = exp(i j pi / m)
  // (z^e - z^-e) / 2i = -i/2 (z^e - z^-e)
  const i64 quarter = n / 4;
  const std::pair<i64, Rational> terms[] = {{e + 3 * quarter, Rational(1, 2)},
                                            {-e + 3 * quarter, Rational(-1, 2)}};
  return CyclotomicNumber::from_terms(n, terms);
}

CyclotomicNumber cos_pi_frac(i64 j, i64 m) {
  if (m < 1) throw std::invalid_argument("cos_pi_frac needs m >= 1");
  const i64 n = 2 * m;
  const std::pair<i64, Rational> terms[] = {{j, Rational(1, 2)}, {-j, Rational(1, 2)}};
  return CyclotomicNumber::from_terms(n, terms);
}

namespace {

// Quadratic Gauss sum g_p = sum (a/p) zeta_p^a, with g_p^2 = (-1/p) p.
CyclotomicNumber gauss_sum_prime(i64 p) {
  std::vector<std::pair<i64, Rational>> terms;
  for (i64 a = 1; a < p; ++a) terms.emplace_back(a, Rational(jacobi(a, p)));
  return CyclotomicNumber::from_terms(p, terms);
}

}  // namespace

CyclotomicNumber sqrt_int(i64 m) {
  if (m < 1) throw std::invalid_argument("sqrt_int needs m >= 1");
  i64 square = 1;
  CyclotomicNumber root = CyclotomicNumber::one();
  for (auto [p, e] : factorize(m)) {
    for (int t = 0; t < e / 2; ++t) square *= p;
    if (e % 2 == 0) continue;
    if (p == 2) {
      root *= CyclotomicNumber::zeta(8, 1) + CyclotomicNumber::zeta(8, -1);
    } else if (p % 4 == 1) {
      root *= gauss_sum_prime(p);
    } else {
      // g_p = i sqrt(p)
      root *= -(CyclotomicNumber::zeta(4, 1) * gauss_sum_prime(p));
    }
  }
  root = root.scaled(Rational(static_cast<long>(square)));
  if (certified_sign(root) == Sign::negative) root = -root;
  return root;
}

std::vector<CyclotomicNumber> conjugates(const CyclotomicNumber& x) {
  std::vector<CyclotomicNumber> out;
  const i64 n = x.conductor();
  for (i64 k = 1; k <= std::max<i64>(n - 1, 1); ++k) {
    if (std::gcd(k, n) != 1) continue;
    CyclotomicNumber y = galois_apply(k, x);
    bool seen = false;
    for (const auto& z : out) {
      if (z == y) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(y));
  }
  return out;
}

Rational algebraic_norm(const CyclotomicNumber& x) {
  const std::size_t d = x.degree();
  if (auto q = x.as_rational()) {
    Rational out = 1;
    for (std::size_t i = 0; i < d; ++i) out *= *q;
    return out;
  }
  detail::IntMatrix m(d, std::vector<Integer>(d));
  // column j: (den * x) * zeta^j
  CyclotomicNumber col = x.scaled(Rational(x.denominator()));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col.numerators()[i];
    col = col.times_zeta_power(1);
  }
  Integer den_power;
  mpz_pow_ui(den_power.get_mpz_t(), x.denominator().get_mpz_t(), static_cast<unsigned long>(d));
  Rational out(detail::determinant(std::move(m)), den_power);
  out.canonicalize();
  return out;
}

bool is_totally_positive(const CyclotomicNumber& x, const PrecisionSchedule& schedule) {
  if (!is_real(x)) return false;
  for (const auto& c : conjugates(x)) {
    if (certified_sign(c, schedule) != Sign::positive) return false;
  }
  return true;
}

PowerProduct& PowerProduct::times(CyclotomicNumber base, i64 exponent) {
  if (exponent == 0) return *this;
  if (auto q = base.as_rational()) {
    if (sgn(*q) == 0) {
      if (exponent < 0) throw DivisionByZero();
      scalar_ = 0;
      return *this;
    }
    Rational p = 1;
    const Rational b = exponent > 0 ? *q : Rational(1 / *q);
    for (i64 i = 0; i < (exponent > 0 ? exponent : -exponent); ++i) p *= b;
    scalar_ *= p;
    return *this;
  }
  factors_.push_back({std::move(base), exponent});
  return *this;
}

PowerProduct& PowerProduct::times_scalar(const Rational& q) {
  scalar_ *= q;
  return *this;
}

PowerProduct& PowerProduct::times(const PowerProduct& other) {
  scalar_ *= other.scalar_;
  factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
  return *this;
}

i64 PowerProduct::conductor() const {
  i64 n = 1;
  for (const auto& f : factors_) n = lcm_checked(n, f.base.conductor());
  return n;
}

CyclotomicNumber PowerProduct::value() const {
  // Positive and negative powers are accumulated separately: one inverse.
  CyclotomicNumber num = CyclotomicNumber::rational(scalar_);
  CyclotomicNumber den = CyclotomicNumber::one();
  for (const auto& f : factors_) {
    if (f.exponent > 0) {
      num *= f.base.pow(f.exponent);
    } else {
      den *= f.base.pow(-f.exponent);
    }
  }
  if (den.is_rational()) return num.scaled(1 / *den.as_rational());
  return num * den.inverse();
}

Sign PowerProduct::galois_sign(i64 k, const PrecisionSchedule& schedule) const {
  const i64 n = conductor();
  if (std::gcd(mod(k, n), n) != 1) {
    throw std::invalid_argument("sigma_" + std::to_string(k) + " not coprime to conductor " +
                                std::to_string(n) + " (gcd " + std::to_string(std::gcd(mod(k, n), n)) +
                                ")");
  }
  Sign s = sign_of(sgn(scalar_));
  if (s == Sign::zero) return s;
  for (const auto& f : factors_) {
    if (f.exponent % 2 == 0) {
      // even power of a nonzero real conjugate is positive
      const CyclotomicNumber y = galois_apply(k, f.base);
      if (y.is_zero()) throw DivisionByZero();
      if (!is_real(y)) throw NotRealError("power-product factor is not real: " + y.to_string());
      continue;
    }
    const Sign fs = certified_sign(galois_apply(k, f.base), schedule);
    if (fs == Sign::zero) throw DivisionByZero();
    s = s * fs;
  }
  return s;
}

}  // namespace wittsig
