#include "wittsig/invariants.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "wittsig/parallel.hpp"

namespace wittsig {

namespace {

void require_rank(int r) {
  if (r < 2) throw std::invalid_argument("rank must be >= 2, got " + std::to_string(r));
}

Rational rational_pow(i64 base, i64 e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(p);
  Rational q(Integer(1), p);
  q.canonicalize();
  return q;
}

// Quantum Weyl dimension with the rho-denominator inverted once.
class QdimEvaluator {
 public:
  explicit QdimEvaluator(int r)
      : r_(r), ell_(4 * static_cast<i64>(r) - 2), roots_(build_root_system(RootType::D, r)) {
    for (i64 n = 0; n <= ell_; ++n) sines_.push_back(sin_pi_frac(n, ell_));
    CyclotomicNumber den = CyclotomicNumber::one(2 * ell_);
    for (const auto& a : roots_.positive_roots) den *= sine(inner4(roots_.rho, a));
    den_inverse_ = den.inverse();
  }

  CyclotomicNumber operator()(const Weight& lambda) const {
    if (!in_alcove_D(lambda) || lambda.rank() != r_) {
      throw std::invalid_argument("weight " + lambda.to_string() + " is not in the alcove of rank " +
                                  std::to_string(r_));
    }
    const Weight shifted = lambda + roots_.rho;
    CyclotomicNumber num = CyclotomicNumber::one(2 * ell_);
    for (const auto& a : roots_.positive_roots) num *= sine(inner4(shifted, a));
    return num * den_inverse_;
  }

 private:
  // sin(n pi / ell) for 4 (mu|alpha) = inner4
  const CyclotomicNumber& sine(i64 inner4_value) const {
    if (inner4_value % 4 != 0) throw std::logic_error("non-integral pairing with a root");
    const i64 n = inner4_value / 4;
    if (n <= 0 || n >= ell_) throw std::invalid_argument("pairing outside (0, 4r-2)");
    return sines_[static_cast<std::size_t>(n)];
  }

  int r_;
  i64 ell_;
  RootSystem roots_;
  std::vector<CyclotomicNumber> sines_;
  CyclotomicNumber den_inverse_;
};

}  // namespace

CyclotomicNumber q_param(int r) {
  require_rank(r);
  return CyclotomicNumber::zeta(8 * static_cast<i64>(r) - 4, 1);
}

i64 twist_modulus(int r) {
  require_rank(r);
  return 16 * (2 * static_cast<i64>(r) - 1);
}

i64 twist_exponent(int r, const Weight& lambda) {
  require_rank(r);
  if (lambda.rank() != r || !in_alcove_D(lambda)) {
    throw std::invalid_argument("weight " + lambda.to_string() + " is not in the alcove of rank " +
                                std::to_string(r));
  }
  const RootSystem rs = build_root_system(RootType::D, r);
  // q = zeta_M^4 and 4 (lambda|lambda+2rho) is an integer
  return mod(inner4(lambda, lambda + 2 * rs.rho), twist_modulus(r));
}

CyclotomicNumber twist(int r, const Weight& lambda) {
  return CyclotomicNumber::zeta(twist_modulus(r), twist_exponent(r, lambda));
}

CyclotomicNumber qdim(int r, const Weight& lambda) {
  require_rank(r);
  return QdimEvaluator(r)(lambda);
}

i64 root_of_unity_order(i64 e, i64 m) { return m / std::gcd(mod(e, m), m); }

CyclotomicNumber CategoryData::twist(std::size_t i) const {
  return CyclotomicNumber::zeta(modulus, twist_exponents.at(i));
}

std::size_t CategoryData::index_of(const Weight& w) const {
  auto it = std::lower_bound(alcove.begin(), alcove.end(), w);
  if (it == alcove.end() || *it != w) {
    throw std::invalid_argument("weight " + w.to_string() + " is not in the alcove");
  }
  return static_cast<std::size_t>(it - alcove.begin());
}

CategoryData build_category_data(int r, unsigned threads) {
  require_rank(r);
  CategoryData c;
  c.rank = r;
  c.modulus = twist_modulus(r);
  c.alcove = alcove_D(r);
  const std::size_t n = c.alcove.size();
  c.twist_exponents.resize(n);
  c.qdims.resize(n);
  c.qdim_squares.resize(n);
  const QdimEvaluator qd(r);
  const Weight two_rho = 2 * build_root_system(RootType::D, r).rho;
  parallel_for(n, threads, [&](std::size_t i) {
    const Weight& w = c.alcove[i];
    c.twist_exponents[i] = mod(inner4(w, w + two_rho), c.modulus);
    c.qdims[i] = qd(w);
    c.qdim_squares[i] = c.qdims[i] * c.qdims[i];
  });
  c.t_order = 1;
  for (i64 e : c.twist_exponents) c.t_order = std::lcm(c.t_order, root_of_unity_order(e, c.modulus));
  c.dim_total = CyclotomicNumber::zero(8 * static_cast<i64>(r) - 4);
  for (const auto& d2 : c.qdim_squares) c.dim_total += d2;
  return c;
}

i64 t_order(int r) {
  require_rank(r);
  const i64 m = twist_modulus(r);
  const Weight two_rho = 2 * build_root_system(RootType::D, r).rho;
  i64 n = 1;
  for (const auto& w : alcove_D(r)) n = std::lcm(n, root_of_unity_order(inner4(w, w + two_rho), m));
  return n;
}

CyclotomicNumber gauss_sum(const CategoryData& c, i64 n) {
  std::map<i64, CyclotomicNumber> by_exponent;
  for (std::size_t i = 0; i < c.alcove.size(); ++i) {
    const i64 e = mod(static_cast<i64>(static_cast<__int128>(n % c.modulus) * c.twist_exponents[i] % c.modulus),
                      c.modulus);
    auto [it, fresh] = by_exponent.try_emplace(e, c.qdim_squares[i]);
    if (!fresh) it->second += c.qdim_squares[i];
  }
  CyclotomicNumber tau = CyclotomicNumber::zero(c.modulus);
  for (const auto& [e, s] : by_exponent) tau += embed(s, c.modulus).times_zeta_power(e);
  return tau;
}

CyclotomicNumber central_charge(const CategoryData& c, i64 n) {
  const CyclotomicNumber tau = gauss_sum(c, n);
  if (tau.is_zero()) throw std::domain_error("gauss sum tau_" + std::to_string(n) + " vanishes");
  if (!(tau * complex_conjugate(tau) == c.dim_total)) {
    throw std::domain_error("|tau_" + std::to_string(n) +
                            "|^2 differs from dim(C); its square root is not available");
  }
  return tau / sqrt_dim_product_C(c.rank).value();
}

PowerProduct sqrt_dim_product_D(int r) {
  require_rank(r);
  const i64 rr = r;
  const i64 m = 2 * rr - 1;
  PowerProduct p;
  if (r % 2 == 1) {
    // 2^((-2r^2+3r-1)/2) (2r-1)^((r-1)/2), times sqrt(2r-1). The constant
    // follows from sqrt|P / (4r-2) Q| = 2 (4r-2)^(r/2) and dim C = 8 dim D.
    p.times_scalar(rational_pow(2, (-2 * rr * rr + 3 * rr - 1) / 2) * rational_pow(m, (rr - 1) / 2));
    p.times(sqrt_int(m));
  } else {
    // 2^((3-2r)r/2 - 1) (2r-1)^(r/2); dim C = 16 dim D
    p.times_scalar(rational_pow(2, (3 - 2 * rr) * rr / 2 - 1) * rational_pow(m, rr / 2));
  }
  for (i64 j = 1; j <= 2 * rr - 3; ++j) p.times(sin_pi_frac(j, 4 * rr - 2), -d_count(rr, j));
  return p;
}

CyclotomicNumber sqrt_dim_formula_D(int r) { return sqrt_dim_product_D(r).value(); }

PowerProduct sqrt_dim_product_B(int b) {
  if (b < 2) throw std::invalid_argument("type B rank must be >= 2, got " + std::to_string(b));
  const i64 bb = b;
  // W sqrt(b) = b^(b/2) / 2^(b^2-b-1)
  PowerProduct p(rational_pow(2, -(bb * bb - bb - 1)) * rational_pow(bb, bb / 2));
  if (bb % 2 == 1) p.times(sqrt_int(bb));
  for (i64 l = 1; l <= bb; ++l) p.times(sin_pi_frac(2 * l - 1, 8 * bb), -1);
  for (i64 j = 1; j <= 2 * bb - 2; ++j) p.times(sin_pi_frac(j, 4 * bb), -c_count(bb, j));
  return p;
}

CyclotomicNumber sqrt_dim_formula_B(int b) { return sqrt_dim_product_B(b).value(); }

PowerProduct sqrt_dim_product_C(int r) {
  PowerProduct p = sqrt_dim_product_D(r);
  if (r % 2 == 1) {
    p.times(sqrt_int(8));
  } else {
    p.times_scalar(4);
  }
  return p;
}

CyclotomicNumber dim_local(const CategoryData& c) {
  return c.dim_total.scaled(Rational(1, c.rank % 2 == 1 ? 8 : 16));
}

std::vector<InvertibleDatum> invertible_data(int r) {
  require_rank(r);
  const i64 rr = r;
  const i64 m = twist_modulus(r);
  const CyclotomicNumber quarter_r2 = CyclotomicNumber::zeta(4, rr * rr);  // exp(r^2 pi i / 2)
  const std::pair<const char*, Weight> weights[] = {
      {"lambda1", 2 * rr * fundamental_weight_D(r, r - 1)},
      // 2r e_1; same as 2r omega_1 except at r = 2, where omega_1 is a spinor weight
      {"lambda2", 2 * rr * unit_vector(r, 1)},
      {"lambda3", 2 * rr * fundamental_weight_D(r, r)},
  };
  std::vector<InvertibleDatum> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [name, w] = weights[i];
    const i64 e = twist_exponent(r, w);
    CyclotomicNumber t = CyclotomicNumber::zeta(m, e);
    CyclotomicNumber expected = i == 1 ? CyclotomicNumber::one() : quarter_r2;
    const bool ok = t == expected;
    out.push_back({name, w, e, std::move(t), std::move(expected), ok});
  }
  return out;
}

std::string category_json(const CategoryData& c, int digits) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["rank"] = c.rank;
  j["twist_modulus"] = c.modulus;
  j["t_order"] = c.t_order;
  ordered_json objects = ordered_json::array();
  for (std::size_t i = 0; i < c.alcove.size(); ++i) {
    objects.push_back({{"coords2", c.alcove[i].coords2},
                       {"twist_exponent", c.twist_exponents[i]},
                       {"qdim", decimal_string(c.qdims[i], digits)}});
  }
  j["objects"] = std::move(objects);
  j["dim"] = decimal_string(c.dim_total, digits);
  j["dim_exact"] = c.dim_total.to_string();
  return j.dump();
}

}  // namespace wittsig
