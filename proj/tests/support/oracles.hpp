#pragma once

// Independent reference computations for tests. Nothing here calls the
// library's numeric evaluation; only plain coefficient access is used.

#include <complex>
#include <functional>
#include <vector>

#include "wittsig/cyclotomic.hpp"

namespace oracle {

using wittsig::i64;

/// sum c_i exp(2 pi i * i / n) in long double.
std::complex<long double> eval(const wittsig::CyclotomicNumber& x);

/// Real value of a product prod f(j)^e(j), each factor a real closure
/// evaluated by MPFR at `bits` bits; returned as a decimal string with
/// `digits` significant digits.
struct MpFactor {
  enum Kind { sin_pi_frac, rational, sqrt_int } kind;
  i64 a;   // numerator / integer
  i64 b;   // denominator (sin: sin(a pi / b))
  i64 exponent;
};
long double mp_product(const std::vector<MpFactor>& factors, unsigned bits = 512);

/// |x - y| <= tol * max(1, |y|) at 512 bits, for a real cyclotomic x.
bool close_512(const wittsig::CyclotomicNumber& x, const std::vector<MpFactor>& factors,
               long double rel_tol);

/// Positive roots of D_r as doubled e-coordinate vectors, e_i - e_j and e_i + e_j.
std::vector<std::vector<i64>> d_positive_roots(int r);

/// Dominant D_r weights (doubled) with c1 + |c2| <= 4r, by nested recursion.
std::vector<std::vector<i64>> d_alcove(int r);

/// a^((p-1)/2) mod p mapped to {-1, 0, 1}; p an odd prime.
int euler_criterion(i64 a, i64 p);

}  // namespace oracle
