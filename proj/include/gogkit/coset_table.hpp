// HLT-style Todd-Coxeter coset enumeration with immediate coincidence
// processing. Deterministic for a fixed input: new cosets are introduced
// at the first undefined entry in row-major scan order, and coincidences
// always keep the lowest-numbered coset.
//
// Enumeration that does not close within the coset cap returns status
// `overflowed` with the partial table retained. An infinite-index
// subgroup is indistinguishable from overflow: the enumerator cannot
// certify infiniteness, it can only fail to close.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gogkit/abelian.hpp"
#include "gogkit/presentation.hpp"

namespace gogkit {

struct CosetTable {
  enum class Status { complete, overflowed };

  Status status = Status::overflowed;
  int index = 0;   // live cosets when complete
  int ngens = 0;   // generators of the underlying presentation
  // Row per coset; column 2g is the action of generator g, column 2g+1
  // its inverse. Complete tables are closed (no -1 entries).
  std::vector<std::vector<int>> rows;

  Presentation presentation;          // the enumerated presentation
  std::vector<Word> subgroup_words;   // generators of the subgroup

  bool complete() const { return status == Status::complete; }
  int act(int coset, int gen, int sign) const {
    return rows[static_cast<size_t>(coset)][static_cast<size_t>(2 * gen + (sign > 0 ? 0 : 1))];
  }
  // Endpoint of tracing `w` from `coset`; requires a complete table.
  int trace(int coset, const Word& w) const;
  // Permutation of cosets induced by a word.
  std::vector<int> word_permutation(const Word& w) const;
};

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        long long max_cosets = 0);

struct QuotientFingerprint {
  Int order = 0;
  std::map<long long, long long> element_orders;  // order -> count
  AbelianInvariants abelian;
};

// The permutation group generated by the generator actions on cosets,
// closed exactly under composition.
QuotientFingerprint coset_action_image(const CosetTable& t, long long budget = 0);

struct WitnessReport {
  struct Entry {
    std::string word;
    bool nontrivial = false;
  };
  std::vector<Entry> entries;
  bool all_nontrivial = true;
};

// True per witness iff its coset-action permutation is nontrivial.
WitnessReport verify_torsion_witness(const Presentation& p, const std::vector<Word>& subgroup,
                                     const std::vector<Word>& witnesses, long long max_cosets = 0);

}  // namespace gogkit
