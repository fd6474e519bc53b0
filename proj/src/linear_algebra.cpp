#include "linear_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace wittsig::detail {

namespace {

// Runs Bareiss elimination on the first `pivots` columns. Returns the number
// of row swaps performed, or -1 if a pivot column has no nonzero entry.
int eliminate(IntMatrix& a, std::size_t pivots) {
  const std::size_t rows = a.size();
  const std::size_t width = rows == 0 ? 0 : a.front().size();
  mpz_class prev = 1;
  mpz_class tmp;
  int swaps = 0;
  for (std::size_t k = 0; k < pivots; ++k) {
    std::size_t p = k;
    while (p < rows && sgn(a[p][k]) == 0) ++p;
    if (p == rows) return -1;
    if (p != k) {
      std::swap(a[p], a[k]);
      ++swaps;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      const bool row_has_entry = sgn(a[i][k]) != 0;
      for (std::size_t j = k + 1; j < width; ++j) {
        // a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        mpz_mul(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), a[k][k].get_mpz_t());
        if (row_has_entry) mpz_submul(a[i][j].get_mpz_t(), a[i][k].get_mpz_t(), a[k][j].get_mpz_t());
        if (prev != 1) mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return swaps;
}

}  // namespace

std::optional<IntSolution> solve_full_column_rank(IntMatrix a, std::vector<mpz_class> b) {
  const std::size_t rows = a.size();
  if (rows == 0) return IntSolution{{}, 1};
  const std::size_t cols = a.front().size();
  if (rows < cols || b.size() != rows) throw std::invalid_argument("bad system shape");
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(std::move(b[i]));

  if (eliminate(a, cols) < 0) throw std::domain_error("matrix is column-rank deficient");
  for (std::size_t i = cols; i < rows; ++i) {
    if (sgn(a[i][cols]) != 0) return std::nullopt;
  }

  // Cramer: with D the last pivot, every x_i * D is an integer.
  const mpz_class d = a[cols - 1][cols - 1];
  std::vector<mpz_class> y(cols);
  mpz_class acc;
  for (std::size_t ii = cols; ii-- > 0;) {
    acc = a[ii][cols] * d;
    for (std::size_t j = ii + 1; j < cols; ++j) {
      mpz_submul(acc.get_mpz_t(), a[ii][j].get_mpz_t(), y[j].get_mpz_t());
    }
    mpz_divexact(y[ii].get_mpz_t(), acc.get_mpz_t(), a[ii][ii].get_mpz_t());
  }
  return IntSolution{std::move(y), d};
}

mpz_class determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  const int swaps = eliminate(a, n);
  if (swaps < 0) return 0;
  mpz_class d = a[n - 1][n - 1];
  return swaps % 2 == 0 ? d : mpz_class(-d);
}

}  // namespace wittsig::detail
