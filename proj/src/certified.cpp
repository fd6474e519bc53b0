#include "wittsig/certified.hpp"

#include <mpfr.h>

#include <algorithm>
#include <vector>

#include "wittsig/errors.hpp"

namespace wittsig {

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

struct Interval {
  explicit Interval(mpfr_prec_t prec) : lo(prec), hi(prec) {}
  Mpfr lo;
  Mpfr hi;
};

// Encloses cos(2 pi j / n).
void cos_enclosure(i64 j, i64 n, Interval& out, mpfr_prec_t prec) {
  j = mod(j, n);
  j = std::min(j, n - j);  // angle in [0, pi]
  auto set_exact = [&](long num, long den) {
    mpfr_set_si(out.lo.get(), num, MPFR_RNDD);
    mpfr_div_si(out.lo.get(), out.lo.get(), den, MPFR_RNDD);
    mpfr_set_si(out.hi.get(), num, MPFR_RNDU);
    mpfr_div_si(out.hi.get(), out.hi.get(), den, MPFR_RNDU);
  };
  if (j == 0) return set_exact(1, 1);
  if (2 * j == n) return set_exact(-1, 1);
  if (4 * j == n) return set_exact(0, 1);
  if (6 * j == n) return set_exact(1, 2);
  if (3 * j == n) return set_exact(-1, 2);

  Mpfr pi_lo(prec), pi_hi(prec), t_lo(prec), t_hi(prec);
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  // theta = 2 pi j / n, enclosed in [t_lo, t_hi]
  mpfr_mul_si(t_lo.get(), pi_lo.get(), 2 * j, MPFR_RNDD);
  mpfr_div_si(t_lo.get(), t_lo.get(), n, MPFR_RNDD);
  mpfr_mul_si(t_hi.get(), pi_hi.get(), 2 * j, MPFR_RNDU);
  mpfr_div_si(t_hi.get(), t_hi.get(), n, MPFR_RNDU);
  // cos is decreasing on [0, pi]
  mpfr_cos(out.hi.get(), t_lo.get(), MPFR_RNDU);
  if (mpfr_cmp(t_hi.get(), pi_lo.get()) >= 0) {
    mpfr_set_si(out.lo.get(), -1, MPFR_RNDD);
  } else {
    mpfr_cos(out.lo.get(), t_hi.get(), MPFR_RNDD);
  }
}

// Encloses Re(x) at the given precision.
void real_part_enclosure(const CyclotomicNumber& x, Interval& sum, mpfr_prec_t prec) {
  const i64 n = x.conductor();
  const auto& num = x.numerators();
  Interval c(prec);
  Mpfr t(prec);
  mpfr_set_zero(sum.lo.get(), 1);
  mpfr_set_zero(sum.hi.get(), 1);
  for (std::size_t i = 0; i < num.size(); ++i) {
    const int s = sgn(num[i]);
    if (s == 0) continue;
    cos_enclosure(static_cast<i64>(i), n, c, prec);
    mpz_srcptr a = num[i].get_mpz_t();
    // a * [clo, chi]: endpoints swap when a < 0
    mpfr_mul_z(t.get(), s > 0 ? c.lo.get() : c.hi.get(), a, MPFR_RNDD);
    mpfr_add(sum.lo.get(), sum.lo.get(), t.get(), MPFR_RNDD);
    mpfr_mul_z(t.get(), s > 0 ? c.hi.get() : c.lo.get(), a, MPFR_RNDU);
    mpfr_add(sum.hi.get(), sum.hi.get(), t.get(), MPFR_RNDU);
  }
  mpfr_div_z(sum.lo.get(), sum.lo.get(), x.denominator().get_mpz_t(), MPFR_RNDD);
  mpfr_div_z(sum.hi.get(), sum.hi.get(), x.denominator().get_mpz_t(), MPFR_RNDU);
}

}  // namespace

bool is_real(const CyclotomicNumber& x) {
  if (x.is_rational()) return true;
  return complex_conjugate(x) == x;
}

Sign certified_sign(const CyclotomicNumber& x, const PrecisionSchedule& schedule) {
  if (x.is_zero()) return Sign::zero;
  if (auto q = x.as_rational()) return sign_of(sgn(*q));
  if (!is_real(x)) {
    throw NotRealError("certified_sign: element is not real at the standard embedding: " +
                       x.to_string());
  }
  if (schedule.start_bits < 2 || schedule.start_bits > schedule.cap_bits) {
    throw std::invalid_argument("precision schedule needs 2 <= start <= cap");
  }
  for (unsigned bits = schedule.start_bits;; bits *= 2) {
    bits = std::min(bits, schedule.cap_bits);
    Interval sum(static_cast<mpfr_prec_t>(bits));
    real_part_enclosure(x, sum, static_cast<mpfr_prec_t>(bits));
    if (mpfr_sgn(sum.lo.get()) > 0) return Sign::positive;
    if (mpfr_sgn(sum.hi.get()) < 0) return Sign::negative;
    if (bits >= schedule.cap_bits) throw PrecisionExhausted(schedule.cap_bits);
  }
}

Sign certified_compare(const CyclotomicNumber& a, const CyclotomicNumber& b,
                       const PrecisionSchedule& schedule) {
  return certified_sign(a - b, schedule);
}

namespace {

// Plain round-to-nearest evaluation; for display only.
void evaluate(const CyclotomicNumber& x, Mpfr& re, Mpfr& im, mpfr_prec_t prec) {
  const i64 n = x.conductor();
  const auto& num = x.numerators();
  Mpfr angle(prec), c(prec), s(prec), t(prec);
  mpfr_set_zero(re.get(), 1);
  mpfr_set_zero(im.get(), 1);
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (sgn(num[i]) == 0) continue;
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_si(angle.get(), angle.get(), 2 * static_cast<long>(i), MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), n, MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    mpfr_mul_z(t.get(), c.get(), num[i].get_mpz_t(), MPFR_RNDN);
    mpfr_add(re.get(), re.get(), t.get(), MPFR_RNDN);
    mpfr_mul_z(t.get(), s.get(), num[i].get_mpz_t(), MPFR_RNDN);
    mpfr_add(im.get(), im.get(), t.get(), MPFR_RNDN);
  }
  mpfr_div_z(re.get(), re.get(), x.denominator().get_mpz_t(), MPFR_RNDN);
  mpfr_div_z(im.get(), im.get(), x.denominator().get_mpz_t(), MPFR_RNDN);
}

mpfr_prec_t display_precision(const CyclotomicNumber& x, int digits) {
  std::size_t bits = mpz_sizeinbase(x.denominator().get_mpz_t(), 2);
  for (const auto& c : x.numerators()) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  // headroom for cancellation among large coefficients
  return static_cast<mpfr_prec_t>(4 * static_cast<std::size_t>(digits) + 2 * bits + 64);
}

}  // namespace

std::complex<double> approximate(const CyclotomicNumber& x) {
  const mpfr_prec_t prec = display_precision(x, 20);
  Mpfr re(prec), im(prec);
  evaluate(x, re, im, prec);
  return {mpfr_get_d(re.get(), MPFR_RNDN), mpfr_get_d(im.get(), MPFR_RNDN)};
}

std::string decimal_string(const CyclotomicNumber& x, int digits) {
  if (digits < 1) throw std::invalid_argument("decimal_string needs at least one digit");
  if (x.is_zero()) return "0";
  const mpfr_prec_t prec = display_precision(x, digits);
  Mpfr re(prec), im(prec);
  evaluate(x, re, im, prec);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, re.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

}  // namespace wittsig
