// Complexes of groups over subdivision graphs: local groups on cells,
// structure monomorphisms along face edges, and twisting elements on
// composable pairs subject to the compatibility and cocycle conditions.
// Includes the fundamental-group presentation and the greedy development
// of finite-group complexes.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gogkit/cell_complex.hpp"
#include "gogkit/covolume.hpp"
#include "gogkit/graph_of_groups.hpp"
#include "gogkit/presentation.hpp"

namespace gogkit {

struct ComplexOfGroups {
  SubdivisionGraph sub;
  std::vector<LocalGroup> locals;      // per subdivision vertex
  std::vector<std::vector<Word>> psi;  // per edge: images of the source
                                       // (larger cell) generators in the
                                       // target group's generators
  // Twisting element per composable pair, as an element id of the target
  // group G_t(a); -1 means the identity. Nontrivial twists require finite
  // targets.
  std::vector<int> twists;

  bool simple() const;  // all twisting elements trivial
  void validate() const;
};

struct CocycleReport {
  bool ok = true;
  std::string failure;  // describes the failing pair or triple
};

// Verifies Ad(g_{a,b}) psi_ab = psi_a psi_b elementwise and the cocycle
// condition psi_a(g_{b,c}) g_{a,bc} = g_{a,b} g_{ab,c} on composable
// triples. Simple complexes with symbolic local groups are trivially
// true; nontrivial twists over symbolic groups are unverifiable.
CocycleReport cocycle_check(const ComplexOfGroups& c);

// Origin of a fundamental-group generator: the local class and position
// it came from, or cls = -1 for an edge letter. `desired` is the name the
// generator would carry without uniquification ("t" for letters).
struct CogGeneratorOrigin {
  std::string desired;
  int cls = -1;
  int position = -1;
};

// Fundamental group relative to a spanning tree of the subdivision graph
// (BFS from the least-labeled vertex when absent): local generators plus
// a letter per non-tree edge, with the relations
//   e+ f+ = g_{e,f} (ef)+,   psi_e(g) = e+ g e-,   e+ = 1 on the tree.
Presentation fundamental_group_cog(const ComplexOfGroups& c,
                                   std::optional<std::vector<int>> spanning_tree = {},
                                   std::vector<CogGeneratorOrigin>* origins = nullptr);

struct DevBall {
  struct Cell {
    int cls = 0;  // subdivision vertex
    int depth = 0;
    std::string label;
  };
  std::vector<Cell> cells;  // live cells with depth <= radius
  struct Incidence {
    int upper = 0;  // index into cells
    int lower = 0;
    int edge = 0;   // subdivision edge: cls(upper) -> cls(lower)
    std::string coset;
  };
  std::vector<Incidence> incidences;
  bool developable = true;
  std::string witness;  // coset inconsistency description when not
  int radius = 0;
};

// Greedy breadth-first development of a complex with finite local groups:
// cells are (class, coset-chart) pairs; face charts are propagated through
// the composable structure and conflicting identifications are merged.
// A chart conflict that cannot be reconciled is reported as a
// non-developability witness rather than an error.
DevBall develop_ball(const ComplexOfGroups& c, int base_vertex, int radius,
                     long long budget = 0);

std::string dot_dev_ball(const DevBall& ball, const ComplexOfGroups& c);

// Covolume sum over the cells of a complex; the same kernel as the graph
// case.
inline CovolumeResult complex_covolume_sum(const std::vector<CovolumeEntry>& entries,
                                           const std::optional<GeometricTail>& tail = {},
                                           bool truncated = false) {
  return covolume_sum(entries, tail, truncated);
}

}  // namespace gogkit
