#include "gogkit/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace gogkit {

std::string AbelianInvariants::str() const {
  std::ostringstream os;
  os << "rank " << free_rank << ", torsion [";
  for (size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i].str();
  os << "]";
  return os.str();
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m(p.relators.size(), std::vector<Int>(p.generators.size(), 0));
  for (size_t r = 0; r < p.relators.size(); ++r)
    for (const Letter& l : p.relators[r].letters)
      m[r][static_cast<size_t>(l.gen)] += l.sign;
  return m;
}

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

std::vector<Int> smith_diagonal(IntMatrix m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  std::vector<Int> diag;
  size_t s = 0;
  while (s < rows && s < cols) {
    // Locate the minimal nonzero |entry| in the trailing submatrix.
    size_t pr = s, pc = s;
    bool found = false;
    Int best = 0;
    for (size_t i = s; i < rows; ++i)
      for (size_t j = s; j < cols; ++j)
        if (m[i][j] != 0 && (!found || int_abs(m[i][j]) < best)) {
          best = int_abs(m[i][j]);
          pr = i;
          pc = j;
          found = true;
        }
    if (!found) break;
    std::swap(m[s], m[pr]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][s], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = s + 1; i < rows; ++i) {
        if (m[i][s] == 0) continue;
        const Int q = m[i][s] / m[s][s];
        for (size_t j = s; j < cols; ++j) m[i][j] -= q * m[s][j];
        if (m[i][s] != 0) {
          std::swap(m[s], m[i]);  // remainder has smaller |value|; re-run
          clean = false;
        }
      }
      for (size_t j = s + 1; j < cols; ++j) {
        if (m[s][j] == 0) continue;
        const Int q = m[s][j] / m[s][s];
        for (size_t i = s; i < rows; ++i) m[i][j] -= q * m[i][s];
        if (m[s][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][s], m[i][j]);
          clean = false;
        }
      }
    }

    // Divisibility fix-up: the pivot must divide the rest of the matrix.
    bool divides = true;
    for (size_t i = s + 1; i < rows && divides; ++i)
      for (size_t j = s + 1; j < cols && divides; ++j)
        if (m[i][j] % m[s][s] != 0) {
          for (size_t k = s; k < cols; ++k) m[s][k] += m[i][k];
          divides = false;
        }
    if (!divides) continue;  // redo elimination at the same pivot slot

    diag.push_back(int_abs(m[s][s]));
    ++s;
  }
  return diag;
}

AbelianInvariants abelianization(const Presentation& p) {
  const std::vector<Int> diag = smith_diagonal(relation_matrix(p));
  return abelian_from_diagonal(diag, p.generators.size());
}

AbelianInvariants abelian_from_diagonal(const std::vector<Int>& diag, size_t n_gens) {
  AbelianInvariants inv;
  size_t nonzero = 0;
  for (const Int& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) inv.torsion.push_back(d);
  }
  std::sort(inv.torsion.begin(), inv.torsion.end());
  inv.free_rank = static_cast<long long>(n_gens) - static_cast<long long>(nonzero);
  return inv;
}

}  // namespace gogkit
