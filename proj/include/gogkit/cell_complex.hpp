// Polyhedral complexes as graded cell posets, and their subdivision
// graphs: one vertex per cell, one oriented edge from sigma to tau for
// every strict face pair tau < sigma, and composable pairs recorded with
// their composites.
//
// Composition follows the standard scwol convention: (a, b) is composable
// when i(a) = t(b), and the composite ab runs i(b) -> t(a). Edges point
// from the larger cell (i) to the smaller (t).
#pragma once

#include <string>
#include <vector>

namespace gogkit {

struct CellComplex {
  struct Cell {
    int dim = 0;
    std::string label;
    std::vector<int> facets;  // cells of dimension dim-1
  };
  std::vector<Cell> cells;

  int add_cell(int dim, const std::string& label, std::vector<int> facets = {});
  void validate() const;  // graded; every positive-dimensional cell has a facet
  // All strict face pairs (sigma, tau), tau < sigma, as a set.
  std::vector<std::pair<int, int>> strict_face_pairs() const;
};

struct SubdivisionGraph {
  struct Vertex {
    std::string label;
    int dim = 0;  // grading used to direct edges; purely combinatorial
  };
  struct Edge {
    int from = 0;  // i(e): the larger cell
    int to = 0;    // t(e): the smaller cell
  };
  struct Composable {
    int a = 0;   // a: sigma -> tau
    int b = 0;   // b: rho -> sigma, i(a) = t(b)
    int ab = 0;  // composite: rho -> tau
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Composable> composables;

  bool connected() const;
  int least_labeled_vertex() const;
  // BFS spanning tree over the undirected edge set; returns edge ids.
  std::vector<int> spanning_tree_edges() const;
  std::vector<int> spanning_tree_from(int root) const;
  // Index of the composite edge for a composable (a, b), or -1.
  int composite_of(int a, int b) const;
  void validate() const;
};

// One vertex per cell, one edge per strict face pair, composable pairs
// enumerated. Rejects complexes with loops in the face structure; graphs
// of groups build their subdivisions directly.
SubdivisionGraph barycentric(const CellComplex& c);

std::string dot_subdivision(const SubdivisionGraph& s);

// The solid pentagon: one 2-cell, five edges, five vertices.
CellComplex solid_polygon(int sides);

}  // namespace gogkit
