// Shared fixtures for the unit and acceptance suites.
#pragma once

#include "gogkit/coxeter.hpp"
#include "gogkit/graph_of_groups.hpp"

namespace gogkit::testing {

// The 5-cycle commutation graph i1-i3-i4-i2-i5-i1.
inline RightAngledCoxeterSystem pentagon_racs() {
  RightAngledCoxeterSystem r;
  r.I = {"i1", "i2", "i3", "i4", "i5"};
  r.commuting = {{0, 2}, {2, 3}, {1, 3}, {1, 4}, {0, 4}};
  return r;
}

inline BuildingSpec pentagon_spec(long long q1, long long q2, long long q3, long long q4,
                                  long long q5) {
  BuildingSpec spec;
  spec.racs = pentagon_racs();
  spec.q = {q1, q2, q3, q4, q5};
  return spec;
}

// A single edge of finite groups with trivial edge group and the given
// cyclic orders at the two ends (Bass-Serre valences = the orders).
inline GraphOfGroups cyclic_edge_gog(int left_order, int right_order) {
  GraphOfGroups g;
  const int v = g.graph.add_vertex("v");
  const int w = g.graph.add_vertex("w");
  g.graph.add_edge_pair(v, w, "e");
  g.vertex_groups.push_back(LocalGroup::of(FiniteGroup::cyclic(left_order, "a")));
  g.vertex_groups.push_back(LocalGroup::of(FiniteGroup::cyclic(right_order, "b")));
  g.edge_groups.push_back(LocalGroup::trivial());
  g.edge_maps = {GraphOfGroups::EdgeMap{}, GraphOfGroups::EdgeMap{}};
  return g;
}

}  // namespace gogkit::testing
