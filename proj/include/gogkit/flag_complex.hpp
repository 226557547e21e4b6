// Flag complexes stored as their 1-skeleta (simplices are the cliques),
// with the doubling, wedge, and covering-link constructions, and graph
// products of groups over them.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "gogkit/presentation.hpp"

namespace gogkit {

struct FlagComplex {
  std::vector<std::string> vertices;
  std::set<std::pair<int, int>> edges;  // i < j

  int add_vertex(const std::string& label);
  void add_edge(int a, int b);
  bool adjacent(int a, int b) const;
  int index_of(const std::string& label) const;
  void validate() const;
};

// Equality as labeled graphs: same vertex label set and the same edge
// label pairs.
bool labeled_graph_equal(const FlagComplex& a, const FlagComplex& b);

// The double over V: vertices (J \ V) plus {v+, v-} per v in V; signed
// copies of distinct vertices are adjacent iff the originals are.
FlagComplex double_complex(const FlagComplex& j, const std::vector<int>& v);

// k copies glued at the basepoint (the first-listed vertex); copy c of a
// non-basepoint vertex u is labeled "u_c".
FlagComplex wedge(const FlagComplex& k, int copies);

// Link of a vertex in the covering complex whose 1-skeleton is a tree on
// the V-directions plus a loop per non-V vertex: computed from the
// covering combinatorics (edge-end pairs and induced square corners) and
// collapsed to one labeled vertex per loop. Defined for wedges over a
// marked set V meeting each wedge copy at most once (or V empty).
FlagComplex salvetti_link(const FlagComplex& l, const std::vector<int>& v);

// Graph product: disjoint-union generators, local relators, and
// commutators across every edge.
Presentation graph_product_presentation(const FlagComplex& k,
                                        const std::vector<Presentation>& vertex_groups);

std::string flag_json(const FlagComplex& f);
FlagComplex flag_from_json(const std::string& text);

}  // namespace gogkit
