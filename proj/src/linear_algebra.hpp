#pragma once

// Fraction-free (Bareiss) elimination over the integers. Internal to the
// cyclotomic arithmetic; every division performed here is exact.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace wittsig::detail {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// Solution of an integer linear system as numerators over a common integer
/// denominator (the denominator may be negative).
struct IntSolution {
  std::vector<mpz_class> numerators;
  mpz_class denominator;
};

/// Solves A x = b for an (rows x cols) integer matrix A of full column rank,
/// rows >= cols. Returns nullopt when the system is inconsistent. Throws
/// std::domain_error when A is column-rank deficient.
std::optional<IntSolution> solve_full_column_rank(IntMatrix a, std::vector<mpz_class> b);

/// Determinant of a square integer matrix.
mpz_class determinant(IntMatrix a);

}  // namespace wittsig::detail
