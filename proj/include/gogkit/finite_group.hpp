// Finite groups as multiplication tables with a named generating set.
// Tables are capped at order 4096; everything the library needs from a
// finite group (coset counts, subgroup closures, element orders, abelian
// invariants, a presentation on the named generators) is computed from
// the table.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gogkit/abelian.hpp"
#include "gogkit/presentation.hpp"

namespace gogkit {

inline constexpr int kMaxFiniteOrder = 4096;

class FiniteGroup {
 public:
  // Validates group axioms: full associativity check up to order 128,
  // deterministic sampling beyond that.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::pair<std::string, int>> generators,
                                std::vector<std::string> element_names = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int q, const std::string& gen_name = "g");
  static FiniteGroup symmetric3();
  static FiniteGroup dihedral4();  // order 8
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  // (Z_2)^r with generators named <prefix>0 .. <prefix>{r-1}.
  static FiniteGroup elementary_abelian_2(int r, const std::string& prefix = "v");

  int order() const { return n_; }
  int identity() const { return id_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
  int element_order(int a) const;
  bool is_abelian() const;

  const std::vector<std::pair<std::string, int>>& generators() const { return gens_; }
  const std::string& element_name(int a) const { return names_[static_cast<size_t>(a)]; }

  // Element of the group named by a word over the named generators.
  int evaluate(const Word& w, const Presentation& ctx) const;
  // Same, with explicit generator images indexed by the word's ids.
  int evaluate_with_images(const Word& w, const std::vector<int>& images) const;

  std::vector<int> subgroup_closure(std::vector<int> seed) const;  // sorted
  // Left cosets c·H: index and the minimal representative of each coset.
  std::vector<int> left_coset_reps(const std::vector<int>& subgroup_sorted) const;
  int subgroup_index(const std::vector<int>& subgroup_sorted) const;
  int min_coset_rep(int x, const std::vector<int>& subgroup_sorted) const;

  std::map<long long, long long> element_order_multiset() const;
  AbelianInvariants abelian_invariants() const;

  // Shortest word over the named generators evaluating to the element
  // (BFS through the Cayley graph; deterministic).
  Word element_word(int elem) const;

  // A finite presentation on the named generators. Uses the declared
  // presentation when one was attached, otherwise derives one from a
  // spanning tree of the Cayley graph (one relator per chord).
  Presentation presentation() const;
  void declare_presentation(Presentation p) { declared_ = std::move(p); }

  // True when the named generators generate the whole group.
  bool generators_generate() const;

 private:
  FiniteGroup() = default;

  int n_ = 0;
  int id_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::string, int>> gens_;
  std::optional<Presentation> declared_;
};

// Invariant-factor decomposition of a finite abelian group described by
// the count of solutions of x^k = 1 for each k dividing the exponent.
// Exposed for reuse by the permutation-image fingerprinting.
std::vector<Int> invariant_factors_from_solution_counts(
    const std::function<long long(long long)>& solutions, long long group_order);

}  // namespace gogkit
