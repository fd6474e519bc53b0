#pragma once

// Signs of real cyclotomic numbers, certified by directed-rounding interval
// evaluation at the standard embedding zeta_n = exp(2 pi i / n).

#include <complex>
#include <string>

#include "wittsig/cyclotomic.hpp"

namespace wittsig {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline int to_int(Sign s) noexcept { return static_cast<int>(s); }
inline Sign sign_of(int v) noexcept {
  return v > 0 ? Sign::positive : (v < 0 ? Sign::negative : Sign::zero);
}
inline Sign operator*(Sign a, Sign b) noexcept { return sign_of(to_int(a) * to_int(b)); }
inline Sign operator-(Sign a) noexcept { return sign_of(-to_int(a)); }

/// Working precision starts at start_bits and doubles until the interval
/// excludes zero or cap_bits is exceeded.
struct PrecisionSchedule {
  unsigned start_bits = 128;
  unsigned cap_bits = 16384;
};

/// True iff x is fixed by complex conjugation (exact test).
bool is_real(const CyclotomicNumber& x);

/// Sign of x. Zero is decided exactly. Throws NotRealError if x is not real
/// and PrecisionExhausted if the cap is hit (cannot happen for a nonzero
/// input with a sufficiently large cap).
Sign certified_sign(const CyclotomicNumber& x, const PrecisionSchedule& schedule = {});

/// sign(a - b) for real a, b.
Sign certified_compare(const CyclotomicNumber& a, const CyclotomicNumber& b,
                       const PrecisionSchedule& schedule = {});

/// Floating-point value for display and numeric oracles (not certified).
std::complex<double> approximate(const CyclotomicNumber& x);

/// Real part rounded to `digits` significant decimal digits.
std::string decimal_string(const CyclotomicNumber& x, int digits = 50);

}  // namespace wittsig
