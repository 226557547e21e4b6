// The tree-to-building functor: F1 turns a graph of groups into a complex
// of groups over the subdivided graph; F2 glues a chamber (or a quotient
// chamber, for loops) onto every edge and extends the local groups by
// cyclic residue factors, producing a complex of groups over a complex
// covered by the right-angled building with matching parameters.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gogkit/complex_of_groups.hpp"
#include "gogkit/coxeter.hpp"
#include "gogkit/graph_of_groups.hpp"

namespace gogkit {

struct F1Image {
  ComplexOfGroups cog;
  GraphOfGroups source;
  std::vector<int> vertex_class;    // graph vertex -> subdivision vertex
  std::vector<int> midpoint_class;  // edge pair -> subdivision vertex
  std::vector<int> half_edge;       // oriented edge -> subdivision edge
};

// Vertices keep their groups, edge midpoints carry the edge groups, and
// the structure maps are the edge monomorphisms. No twisting.
F1Image F1(const GraphOfGroups& g);

// Complex-of-lattices metadata propagated through the functor: the
// ambient group and per-cell Haar/kernels are inherited from the input
// assertions; structure-map images of subdivided edges inherit the
// stable-letter images and inclusion edges map to the identity. Echoed
// as unverified assertions.
struct ComplexLatticeAssertions {
  std::string ambient;
  struct LocalAssertion {
    Rational mu = 0;
    Int kernel_order = 1;
    bool verified = false;
  };
  std::vector<LocalAssertion> vertex_data;  // per subdivision vertex
  std::vector<std::string> edge_psi;        // per subdivision edge, image in H
  bool locals_commensurable = true;
  bool locals_verified = false;
};

struct TypedComplexOfGroups {
  ComplexOfGroups cog;
  BuildingSpec spec;
  int i1 = 0, i2 = 0;
  struct VertexType {
    std::vector<std::vector<int>> types;  // one spherical set, or the two
                                          // h-identified ones on a merged
                                          // vertex
    std::string source;                   // "edge <label>" or "vertex <label>"
  };
  std::vector<VertexType> vtypes;  // per subdivision vertex
  struct LocalShape {
    std::string base;                // input local group the cell carries
    std::vector<int> cyclic_types;   // generator indices of the cyclic factors
  };
  std::vector<LocalShape> shapes;  // per subdivision vertex
  std::optional<ComplexLatticeAssertions> lattice;
  int base_vertex = 0;  // the cone-class of the least-labeled input edge
};

// Preconditions: m(i1,i2) infinite, T1 holds, the Bass-Serre valences
// match (q_i1, q_i2) (identity-like embeddings with all edge indices 1
// are exempt), and when the graph is not 2-colorable or q_i1 = q_i2, T2
// holds with a T1 witness extending it. `override_t2` downgrades a
// missing extension to a warning when the construction itself does not
// need the gluing isometry (2-colorable inputs).
TypedComplexOfGroups F2(const F1Image& c, const BuildingSpec& spec, int i1, int i2,
                        bool override_t2 = false);

struct ThomasResult {
  TypedComplexOfGroups complex;
  Presentation presentation;  // simplified, deterministically renamed
};

ThomasResult thomas(const GraphOfGroups& g, const BuildingSpec& spec, int i1, int i2,
                    bool override_t2 = false);

// Raw fundamental group of the typed complex relative to the documented
// spanning tree (BFS from the base cone-class), before simplification.
Presentation typed_fundamental_group(const TypedComplexOfGroups& t,
                                     std::vector<CogGeneratorOrigin>* origins = nullptr);

}  // namespace gogkit
