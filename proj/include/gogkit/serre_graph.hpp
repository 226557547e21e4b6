// Graphs in Serre's sense: oriented edges in mate pairs under a
// fixed-point-free involution, with endpoint maps satisfying
// iota(mate(e)) = tau(e). Mates are stored adjacently: mate(2k) = 2k+1.
#pragma once

#include <string>
#include <vector>

namespace gogkit {

struct SerreGraph {
  struct OrientedEdge {
    int iota = 0;
    int tau = 0;
    int mate = 0;
    std::string label;
  };

  std::vector<std::string> vertex_labels;
  std::vector<OrientedEdge> edges;

  int add_vertex(const std::string& label);
  // Adds the pair {e, mate(e)}; returns the forward index (even).
  int add_edge_pair(int iota, int tau, const std::string& label);

  size_t vertex_count() const { return vertex_labels.size(); }
  size_t edge_pair_count() const { return edges.size() / 2; }
  int mate(int e) const { return edges[static_cast<size_t>(e)].mate; }
  int pair_of(int e) const { return e / 2; }

  void validate() const;  // involution + endpoint consistency
  bool connected() const;

  // BFS spanning tree rooted at the least-labeled vertex; returns the set
  // of edge-pair ids in the tree. Deterministic.
  std::vector<int> spanning_tree_pairs() const;

  // First Betti number of the underlying graph (connected case):
  // edge pairs - vertices + 1.
  long long first_betti() const;

  int least_labeled_vertex() const;
};

std::string dot_serre_graph(const SerreGraph& g);

}  // namespace gogkit
