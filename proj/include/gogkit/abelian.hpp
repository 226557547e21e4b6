// Abelianization via integer Smith normal form. Exact arbitrary-precision
// arithmetic: relation matrices here have small entries but intermediate
// growth during elimination must not overflow.
#pragma once

#include <vector>

#include "gogkit/presentation.hpp"
#include "gogkit/rational.hpp"

namespace gogkit {

struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<Int> torsion;  // divisor chain d1 | d2 | ..., all >= 2

  bool operator==(const AbelianInvariants& o) const = default;
  std::string str() const;
};

using IntMatrix = std::vector<std::vector<Int>>;

// Exponent-sum matrix: one row per relator, one column per generator.
IntMatrix relation_matrix(const Presentation& p);

// Diagonal of the Smith normal form, nonnegative, in divisibility order.
// Pivoting picks the entry of minimal absolute value in the remaining
// submatrix.
std::vector<Int> smith_diagonal(IntMatrix m);

AbelianInvariants abelianization(const Presentation& p);

// Invariants of a finitely generated abelian group presented by a diagonal
// relation list (0 = free factor), used as a cross-check oracle.
AbelianInvariants abelian_from_diagonal(const std::vector<Int>& diag, size_t n_gens);

}  // namespace gogkit
