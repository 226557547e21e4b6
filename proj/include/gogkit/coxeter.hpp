// Right-angled Coxeter systems, spherical subsets, nerves and chambers,
// building parameters, and the two symmetry conditions gating the
// tree-to-building functor.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gogkit/cell_complex.hpp"
#include "gogkit/flag_complex.hpp"

namespace gogkit {

struct RightAngledCoxeterSystem {
  std::vector<std::string> I;                 // generator names
  std::set<std::pair<int, int>> commuting;    // i < j with m(i,j) = 2

  bool commute(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return commuting.count({i, j}) != 0;
  }
  // m(i,j): 1 on the diagonal, 2 on commuting pairs, 0 for infinity.
  int m(int i, int j) const { return i == j ? 1 : (commute(i, j) ? 2 : 0); }
  int index_of(const std::string& name) const;
  void validate() const;
};

struct BuildingSpec {
  RightAngledCoxeterSystem racs;
  std::vector<long long> q;  // per generator, all >= 2

  void validate() const;
};

// All spherical subsets: cliques of the commutation graph including the
// empty set, in lexicographic order.
std::vector<std::vector<int>> spherical_subsets(const RightAngledCoxeterSystem& r,
                                                long long budget = 0);

// The nerve as a flag complex on I (vertices + commuting edges).
FlagComplex nerve(const RightAngledCoxeterSystem& r);

// The chamber: poset of spherical subsets under inclusion, with the empty
// set as the cone vertex. Cell dimension of J is (max clique size) - |J|.
struct Chamber {
  std::vector<std::vector<int>> types;             // vertex per spherical set
  std::vector<std::pair<int, int>> face_pairs;     // (bigger cell, smaller cell):
                                                   // (J, J') with J strictly contained in J'
};
Chamber chamber(const RightAngledCoxeterSystem& r);

// Symmetry condition witnesses. Both require m(i1,i2) = infinity.
//
// T1: a bijection g of I with m(i,j) = m(g(i),g(j)) and g(i1) = i2;
// lexicographically least witness or absent.
std::optional<std::vector<int>> check_T1(const BuildingSpec& spec, int i1, int i2);

// T2: a bijection h from {i : m(i1,i) < inf} to {i : m(i2,i) < inf}
// preserving m and the parameters q, with h(i1) = i2.
std::optional<std::map<int, int>> check_T2(const BuildingSpec& spec, int i1, int i2);

// A T1 witness g whose restriction to the finite-m neighborhood of i1 is
// a T2 witness; the functor's loop gluing uses the restriction.
std::optional<std::vector<int>> t1_witness_extending_t2(const BuildingSpec& spec, int i1,
                                                        int i2);

}  // namespace gogkit
