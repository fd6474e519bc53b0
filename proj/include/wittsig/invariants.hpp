#pragma once

#include <string>
#include <vector>

#include "wittsig/exact.hpp"
#include "wittsig/roots.hpp"

namespace wittsig {

/// q = exp(pi i / (4r - 2)) = zeta_{8r-4}.
CyclotomicNumber q_param(int r);

/// 16(2r - 1); every twist of C_r is a power of zeta with this order.
i64 twist_modulus(int r);

/// e with theta_lambda = zeta_{16(2r-1)}^e, i.e. e = 4 (lambda|lambda+2rho)
/// reduced. Throws std::invalid_argument if lambda is not in the alcove.
i64 twist_exponent(int r, const Weight& lambda);
CyclotomicNumber twist(int r, const Weight& lambda);

/// Quantum dimension by the q-Weyl product, at conductor 8r - 4.
CyclotomicNumber qdim(int r, const Weight& lambda);

/// Multiplicative order of zeta_m^e.
i64 root_of_unity_order(i64 e, i64 m);

/// Numerical data of C_r = so(2r) at level 2r.
struct CategoryData {
  int rank = 0;
  i64 modulus = 0;  // 16(2r - 1)
  std::vector<Weight> alcove;
  std::vector<i64> twist_exponents;
  std::vector<CyclotomicNumber> qdims;
  std::vector<CyclotomicNumber> qdim_squares;
  i64 t_order = 0;
  CyclotomicNumber dim_total;

  CyclotomicNumber twist(std::size_t i) const;
  std::size_t index_of(const Weight& w) const;  // throws if absent
};

/// Per-object work is spread over `threads` workers.
CategoryData build_category_data(int r, unsigned threads = 1);

i64 t_order(int r);

/// tau_n = sum d^2 theta^n, at conductor 16(2r - 1).
CyclotomicNumber gauss_sum(const CategoryData& c, i64 n);

/// xi_n = tau_n / |tau_n|. Supported when |tau_n|^2 = dim(C), which holds
/// for n = 1; other n throw std::domain_error when that fails, as does a
/// vanishing tau_n.
CyclotomicNumber central_charge(const CategoryData& c, i64 n);

/// D_r = sqrt(dim D_r) as an unevaluated product (rational constant, sqrt of
/// 2r - 1 for odd r, sines to negative powers).
PowerProduct sqrt_dim_product_D(int r);
CyclotomicNumber sqrt_dim_formula_D(int r);

/// B_b from the type-B product formula, in Q(zeta_{16b}).
PowerProduct sqrt_dim_product_B(int b);
CyclotomicNumber sqrt_dim_formula_B(int b);

/// sqrt(dim C_r) = 2 sqrt(2) D_r (r odd) or 4 D_r (r even).
PowerProduct sqrt_dim_product_C(int r);

/// dim(C_r) / 8 for odd r, / 16 for even r.
CyclotomicNumber dim_local(const CategoryData& c);

struct InvertibleDatum {
  std::string name;  // "lambda1" etc.
  Weight weight;
  i64 twist_exponent;
  CyclotomicNumber twist;
  CyclotomicNumber expected;  // exp(r^2 pi i / 2), 1, exp(r^2 pi i / 2)
  bool matches;
};

/// lambda1 = 2r omega_{r-1}, lambda2 = 2r e_1, lambda3 = 2r omega_r.
std::vector<InvertibleDatum> invertible_data(int r);

/// JSON object with per-object coords, twist exponent over 16(2r-1), qdim
/// decimal, N_r and the global dimension.
std::string category_json(const CategoryData& c, int digits = 30);

}  // namespace wittsig
