// Graphs of groups: Serre graphs carrying local groups on vertices and
// edge pairs, with a monomorphism from each edge group into the vertex
// group at its initial endpoint. Finite local groups are multiplication
// tables and their edge maps are verified injective; symbolic (infinite)
// local groups carry presentations and declared edge indices.
#pragma once

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "gogkit/finite_group.hpp"
#include "gogkit/presentation.hpp"
#include "gogkit/rational.hpp"
#include "gogkit/serre_graph.hpp"

namespace gogkit {

struct SymbolicGroup {
  Presentation pres;
  // Set when the group is free abelian with the presentation generators
  // as a basis; enables the determinant cross-check on edge maps.
  std::optional<int> free_abelian_rank;
};

struct LocalGroup {
  std::variant<SymbolicGroup, FiniteGroup> data;  // defaults to the trivial symbolic group

  bool finite() const { return std::holds_alternative<FiniteGroup>(data); }
  const FiniteGroup& table() const { return std::get<FiniteGroup>(data); }
  const SymbolicGroup& symbolic() const { return std::get<SymbolicGroup>(data); }
  Presentation presentation() const;
  std::string describe() const;

  static LocalGroup of(FiniteGroup g) { return LocalGroup{std::move(g)}; }
  static LocalGroup of(SymbolicGroup g) { return LocalGroup{std::move(g)}; }
  static LocalGroup trivial() { return of(FiniteGroup::trivial()); }
  // Z^n on the given generator names.
  static LocalGroup free_abelian(const std::vector<std::string>& gens);
};

// Structured record of the lattice-data assertions carried by a graph of
// lattices: Haar measures of the local images, kernel orders, and the
// commensurability claims. Assertions are verified only in the
// free-abelian-with-integer-matrix case; otherwise they are echoed as
// unverified metadata.
struct LatticeAssertions {
  std::string ambient;  // name of the target locally compact group
  struct LocalAssertion {
    Rational mu = 0;        // Haar measure of the image
    Int kernel_order = 1;   // |Ker(psi)| on this local group
    bool verified = false;
  };
  std::vector<LocalAssertion> vertex_data;  // per vertex
  std::vector<LocalAssertion> edge_data;    // per edge pair
  struct StableLetter {
    std::string edge_label;
    std::string psi_image;           // symbolic image of t_e in the ambient group
    bool commensurates = true;       // asserted membership in the commensurator
    bool verified = false;
  };
  std::vector<StableLetter> stable_letters;
  bool locals_commensurable = true;
  bool locals_verified = false;
};

struct GraphOfGroups {
  SerreGraph graph;
  std::vector<LocalGroup> vertex_groups;  // per vertex
  std::vector<LocalGroup> edge_groups;    // per edge pair
  struct EdgeMap {
    std::vector<Word> images;  // per edge-group generator, a word in the
                               // iota-vertex group's generators
    std::optional<long long> declared_index;
  };
  std::vector<EdgeMap> edge_maps;  // per oriented edge
  std::optional<LatticeAssertions> lattice;

  const LocalGroup& edge_group(int oriented_edge) const {
    return edge_groups[static_cast<size_t>(graph.pair_of(oriented_edge))];
  }
  void validate() const;
};

struct EdgeIndexedGraph {
  SerreGraph graph;
  std::vector<long long> idx;  // per oriented edge, [A_iota(e) : alpha_e(A_e)]
};

// idx(e) by explicit coset counting for finite groups, from declarations
// for symbolic groups (with the determinant cross-check when the groups
// are marked free abelian).
EdgeIndexedGraph edge_indices(const GraphOfGroups& g);

// valence(v) = sum of idx(e) over oriented edges with iota(e) = v; these
// are the valences of the Bass-Serre tree at lifts of v.
std::vector<long long> bass_serre_valences(const EdgeIndexedGraph& e);

struct UnimodularReport {
  bool unimodular = true;
  std::vector<int> witness_cycle;  // oriented edges of a failing cycle
  Rational ratio = 1;              // product of idx(e)/idx(mate(e)) along it
};

// Checks the index-ratio product around a cycle basis (spanning tree plus
// chords); exact rational arithmetic. Independent of the tree choice.
UnimodularReport check_unimodular(const EdgeIndexedGraph& e);

// Presentation of the fundamental group relative to a spanning tree
// (computed deterministically when absent): local generators plus one
// stable letter per non-tree edge pair, local relations, and the edge
// relations t_e alpha_mate(g) t_e^-1 = alpha_e(g) with tree letters
// replaced by the identity.
Presentation fundamental_group(const GraphOfGroups& g,
                               std::optional<std::vector<int>> spanning_tree_pairs = {});

// Serre covolume of the quotient: sum over vertices of 1/|A_v|. All
// vertex groups must be finite.
Rational serre_covolume(const GraphOfGroups& g);

struct TreeBall {
  struct Node {
    int orbit_vertex = 0;
    int depth = 0;
    int parent = -1;       // node index
    int parent_edge = -1;  // oriented edge from parent's orbit vertex
    std::string label;
    std::vector<int> children;
    bool interior = false;  // fully expanded (depth < radius)
  };
  std::vector<Node> nodes;
  int radius = 0;
  long long valence(int node) const {
    return static_cast<long long>(nodes[static_cast<size_t>(node)].children.size()) +
           (nodes[static_cast<size_t>(node)].parent >= 0 ? 1 : 0);
  }
};

// Ball of the Bass-Serre tree built by explicit coset enumeration inside
// the finite local groups; each node is annotated with its orbit vertex.
TreeBall develop_tree_ball(const GraphOfGroups& g, int base_vertex, int radius,
                           long long budget = 0);

std::string dot_edge_indexed(const EdgeIndexedGraph& g);
std::string dot_tree_ball(const TreeBall& ball, const SerreGraph& g);

}  // namespace gogkit
