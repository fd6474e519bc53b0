#include "wittsig/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "linear_algebra.hpp"
#include "wittsig/errors.hpp"

namespace wittsig {

namespace detail {

struct CyclotomicField {
  i64 n = 1;
  std::size_t phi = 1;
  // Coefficients c_0..c_{phi-1} of Phi_n below the leading 1, nonzero only.
  std::vector<std::pair<std::size_t, long>> low_terms;
};

namespace {

using Poly = std::vector<long>;  // ascending coefficients

Poly substitute_power(const Poly& p, i64 e) {
  Poly out((p.size() - 1) * static_cast<std::size_t>(e) + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * static_cast<std::size_t>(e)] = p[i];
  return out;
}

Poly divide_exact_monic(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dn; ++t) num[i - dn + t] -= c * den[t];
  }
  return q;
}

Poly cyclotomic_polynomial(i64 n) {
  if (n == 1) return {-1, 1};
  if (n == 2) return {1, 1};
  i64 rad = 1;
  i64 odd_rad = 1;
  Poly p = {-1, 1};
  for (auto [prime, e] : factorize(n)) {
    rad *= prime;
    if (prime == 2) continue;
    odd_rad *= prime;
    p = divide_exact_monic(substitute_power(p, prime), p);
  }
  if (n % 2 == 0) {
    if (odd_rad == 1) {
      p = {1, 1};
    } else {
      for (std::size_t i = 1; i < p.size(); i += 2) p[i] = -p[i];
    }
  }
  return substitute_power(p, n / rad);
}

std::shared_ptr<const CyclotomicField> build_field(i64 n) {
  auto f = std::make_shared<CyclotomicField>();
  f->n = n;
  const Poly p = cyclotomic_polynomial(n);
  f->phi = p.size() - 1;
  for (std::size_t t = 0; t < f->phi; ++t) {
    if (p[t] != 0) f->low_terms.emplace_back(t, p[t]);
  }
  return f;
}

}  // namespace

// Memoized; the cached fields are immutable once published.
std::shared_ptr<const CyclotomicField> field_for(i64 n) {
  if (n <= 0) throw std::invalid_argument("conductor must be positive, got " + std::to_string(n));
  static std::mutex mutex;
  static std::unordered_map<i64, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto f = build_field(n);
  cache.emplace(n, f);
  return f;
}

namespace {

void add_scaled(mpz_class& target, const mpz_class& c, long p) {
  if (p > 0) {
    mpz_addmul_ui(target.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
  } else {
    mpz_submul_ui(target.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-p));
  }
}

// Reduces a polynomial in zeta_n modulo x^n - 1 and then modulo Phi_n.
void reduce(std::vector<mpz_class>& a, const CyclotomicField& f) {
  const auto n = static_cast<std::size_t>(f.n);
  if (a.size() > n) {
    for (std::size_t i = n; i < a.size(); ++i) {
      if (sgn(a[i]) != 0) a[i % n] += a[i];
    }
    a.resize(n);
  }
  for (std::size_t i = a.size(); i-- > f.phi;) {
    if (sgn(a[i]) == 0) continue;
    const mpz_class c = a[i];
    const std::size_t base = i - f.phi;
    // x^phi = -sum(low terms)
    for (const auto& [t, p] : f.low_terms) add_scaled(a[base + t], c, -p);
    a[i] = 0;
  }
  a.resize(f.phi);
}

}  // namespace

}  // namespace detail

using detail::field_for;

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(field_for(1), {0}, 1) {}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const detail::CyclotomicField> field,
                                   std::vector<Integer> num, Integer den)
    : field_(std::move(field)), conductor_(field_->n), num_(std::move(num)), den_(std::move(den)) {}

CyclotomicNumber CyclotomicNumber::from_unreduced(
    std::shared_ptr<const detail::CyclotomicField> field, std::vector<Integer> num, Integer den) {
  if (sgn(den) == 0) throw DivisionByZero();
  detail::reduce(num, *field);
  CyclotomicNumber out(std::move(field), std::move(num), std::move(den));
  out.normalize();
  return out;
}

void CyclotomicNumber::normalize() {
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  bool all_zero = true;
  for (const auto& c : num_) {
    if (sgn(c) == 0) continue;
    all_zero = false;
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g == 1) {
    // finish the scan for the zero check only
    return;
  }
  for (auto& c : num_) {
    if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CyclotomicNumber CyclotomicNumber::zero(i64 conductor) {
  auto f = field_for(conductor);
  std::vector<Integer> num(f->phi);
  return {f, std::move(num), 1};
}

CyclotomicNumber CyclotomicNumber::one(i64 conductor) { return integer(1, conductor); }

CyclotomicNumber CyclotomicNumber::integer(long value, i64 conductor) {
  return rational(Rational(value), conductor);
}

CyclotomicNumber CyclotomicNumber::rational(const Rational& value, i64 conductor) {
  auto f = field_for(conductor);
  std::vector<Integer> num(f->phi);
  num[0] = value.get_num();
  CyclotomicNumber out(f, std::move(num), value.get_den());
  out.normalize();
  return out;
}

CyclotomicNumber CyclotomicNumber::zeta(i64 n, i64 power) {
  auto f = field_for(n);
  std::vector<Integer> num(static_cast<std::size_t>(n));
  num[static_cast<std::size_t>(mod(power, n))] = 1;
  return from_unreduced(f, std::move(num), 1);
}

CyclotomicNumber CyclotomicNumber::from_terms(i64 n,
                                              std::span<const std::pair<i64, Rational>> terms) {
  auto f = field_for(n);
  Integer common = 1;
  for (const auto& [e, c] : terms) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> num(static_cast<std::size_t>(n));
  for (const auto& [e, c] : terms) {
    num[static_cast<std::size_t>(mod(e, n))] += c.get_num() * (common / c.get_den());
  }
  return from_unreduced(f, std::move(num), common);
}

CyclotomicNumber CyclotomicNumber::from_coefficients(i64 n, std::span<const Rational> coeffs) {
  auto f = field_for(n);
  if (coeffs.size() != f->phi) {
    throw std::invalid_argument("expected " + std::to_string(f->phi) + " coefficients for conductor " +
                                std::to_string(n));
  }
  std::vector<std::pair<i64, Rational>> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) terms.emplace_back(static_cast<i64>(i), coeffs[i]);
  return from_terms(n, terms);
}

Rational CyclotomicNumber::coefficient(std::size_t i) const {
  Rational q(num_.at(i), den_);
  q.canonicalize();
  return q;
}

std::vector<Rational> CyclotomicNumber::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coefficient(i));
  return out;
}

bool CyclotomicNumber::is_zero() const noexcept {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

bool CyclotomicNumber::is_rational() const noexcept {
  return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coefficient(0);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  if (conductor_ != rhs.conductor_) {
    const i64 l = lcm_checked(conductor_, rhs.conductor_);
    *this = embed(*this, l);
    return *this += embed(rhs, l);
  }
  if (den_ == rhs.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += rhs.num_[i];
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= rhs.den_;
      mpz_addmul(num_[i].get_mpz_t(), rhs.num_[i].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) { return *this += -rhs; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  if (conductor_ != rhs.conductor_) {
    const i64 l = lcm_checked(conductor_, rhs.conductor_);
    *this = embed(*this, l);
    return *this *= embed(rhs, l);
  }
  if (rhs.is_rational()) return *this = scaled(rhs.coefficient(0));
  if (is_rational()) return *this = rhs.scaled(coefficient(0));
  const std::size_t d = num_.size();
  std::vector<Integer> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(num_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(rhs.num_[j]) == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), rhs.num_[j].get_mpz_t());
    }
  }
  *this = from_unreduced(field_, std::move(prod), den_ * rhs.den_);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) {
  return *this *= rhs.inverse();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ != b.conductor_) {
    const i64 l = lcm_checked(a.conductor_, b.conductor_);
    return embed(a, l) == embed(b, l);
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& factor) const {
  if (sgn(factor) == 0) return zero(conductor_);
  CyclotomicNumber out = *this;
  for (auto& c : out.num_) c *= factor.get_num();
  out.den_ *= factor.get_den();
  out.normalize();
  return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) {
    Rational q = coefficient(0);
    return rational(1 / q, conductor_);
  }
  // Column j of the multiplication matrix holds num * zeta^j.
  const std::size_t d = num_.size();
  detail::IntMatrix m(d, std::vector<Integer>(d));
  std::vector<Integer> col = num_;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
    if (j + 1 < d) {
      col.insert(col.begin(), Integer(0));
      detail::reduce(col, *field_);
    }
  }
  // (num / den) * y = 1  <=>  num * y = den
  std::vector<Integer> rhs(d);
  rhs[0] = den_;
  auto sol = detail::solve_full_column_rank(std::move(m), std::move(rhs));
  if (!sol) throw std::logic_error("inverse: inconsistent system for a nonzero element");
  CyclotomicNumber out(field_, std::move(sol->numerators), std::move(sol->denominator));
  out.normalize();
  return out;
}

CyclotomicNumber CyclotomicNumber::pow(i64 exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CyclotomicNumber result = one(conductor_);
  CyclotomicNumber base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

CyclotomicNumber CyclotomicNumber::times_zeta_power(i64 power) const {
  const auto n = static_cast<std::size_t>(conductor_);
  const auto shift = static_cast<std::size_t>(mod(power, conductor_));
  std::vector<Integer> v(n);
  for (std::size_t i = 0; i < num_.size(); ++i) v[(i + shift) % n] = num_[i];
  return from_unreduced(field_, std::move(v), den_);
}

std::string CyclotomicNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    Rational c = coefficient(i);
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "z" << conductor_;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

CyclotomicNumber cyclo_arith(const CyclotomicNumber& a, const CyclotomicNumber& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw std::invalid_argument("unknown arithmetic op");
}

CyclotomicNumber embed(const CyclotomicNumber& x, i64 m) {
  if (m <= 0 || m % x.conductor_ != 0) {
    throw std::invalid_argument("cannot embed conductor " + std::to_string(x.conductor_) +
                                " into " + std::to_string(m) + ": not a multiple");
  }
  if (m == x.conductor_) return x;
  const auto step = static_cast<std::size_t>(m / x.conductor_);
  std::vector<Integer> v((x.num_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < x.num_.size(); ++i) v[i * step] = x.num_[i];
  return CyclotomicNumber::from_unreduced(field_for(m), std::move(v), x.den_);
}

namespace {

// x known to lie in Q(zeta_n); try to write it over Q(zeta_g) for g | n.
std::optional<CyclotomicNumber> restrict_to_divisor(const CyclotomicNumber& x, i64 g) {
  const i64 n = x.conductor();
  if (g == n) return x;
  if (x.is_rational()) return CyclotomicNumber::rational(*x.as_rational(), g);
  const std::size_t rows = x.degree();
  const auto cols = static_cast<std::size_t>(euler_phi(g));
  detail::IntMatrix e(rows, std::vector<Integer>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    const CyclotomicNumber col = embed(CyclotomicNumber::zeta(g, static_cast<i64>(j)), n);
    for (std::size_t i = 0; i < rows; ++i) e[i][j] = col.numerators()[i];
  }
  auto sol = detail::solve_full_column_rank(std::move(e), x.numerators());
  if (!sol) return std::nullopt;
  std::vector<std::pair<i64, Rational>> terms;
  const Integer den = sol->denominator * x.denominator();
  for (std::size_t j = 0; j < cols; ++j) {
    Rational c(sol->numerators[j], den);
    c.canonicalize();
    terms.emplace_back(static_cast<i64>(j), c);
  }
  return CyclotomicNumber::from_terms(g, terms);
}

}  // namespace

std::optional<CyclotomicNumber> represent_at(const CyclotomicNumber& x, i64 m) {
  if (m <= 0) throw std::invalid_argument("conductor must be positive");
  const i64 g = std::gcd(x.conductor(), m);
  auto y = restrict_to_divisor(x, g);
  if (!y) return std::nullopt;
  return embed(*y, m);
}

CyclotomicNumber minimize_conductor(const CyclotomicNumber& x) {
  if (x.is_rational()) return CyclotomicNumber::rational(*x.as_rational(), 1);
  for (i64 d : divisors(x.conductor())) {
    if (d % 4 == 2 || d == 1) continue;
    if (auto y = restrict_to_divisor(x, d)) return *y;
  }
  return x;
}

GaloisElement::GaloisElement(i64 k, i64 n) : k_(0), n_(n) {
  if (n <= 0) throw std::invalid_argument("Galois element needs a positive conductor");
  const i64 r = mod(k, n);
  if (std::gcd(r, n) != 1) {
    throw std::invalid_argument("sigma_" + std::to_string(k) + " undefined on Q(zeta_" +
                                std::to_string(n) + "): gcd = " + std::to_string(std::gcd(r, n)));
  }
  k_ = n <= 2 ? 1 : r;
}

GaloisElement GaloisElement::compose(const GaloisElement& other) const {
  if (other.n_ != n_) throw std::invalid_argument("composing Galois elements of different conductors");
  return {static_cast<i64>(static_cast<__int128>(k_) * other.k_ % n_), n_};
}

CyclotomicNumber galois_apply(i64 k, const CyclotomicNumber& x) {
  const i64 n = x.conductor_;
  const i64 r = mod(k, n);
  if (std::gcd(r, n) != 1) {
    throw std::invalid_argument("sigma_" + std::to_string(k) + " not defined at conductor " +
                                std::to_string(n) + ": gcd = " + std::to_string(std::gcd(r, n)));
  }
  if (n <= 2 || r == 1) return x;
  std::vector<Integer> v(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < x.num_.size(); ++i) {
    if (sgn(x.num_[i]) == 0) continue;
    v[static_cast<std::size_t>(static_cast<__int128>(i) * r % n)] = x.num_[i];
  }
  return CyclotomicNumber::from_unreduced(x.field_, std::move(v), x.den_);
}

CyclotomicNumber galois_apply(const GaloisElement& sigma, const CyclotomicNumber& x) {
  if (sigma.n() % x.conductor() != 0) {
    throw std::invalid_argument("sigma on Q(zeta_" + std::to_string(sigma.n()) +
                                ") cannot act on conductor " + std::to_string(x.conductor()));
  }
  return galois_apply(sigma.k(), x);
}

CyclotomicNumber complex_conjugate(const CyclotomicNumber& x) {
  return galois_apply(x.conductor() - 1, x);
}

}  // namespace wittsig
