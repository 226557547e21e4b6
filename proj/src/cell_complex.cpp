#include "gogkit/cell_complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "gogkit/errors.hpp"

namespace gogkit {

int CellComplex::add_cell(int dim, const std::string& label, std::vector<int> facets) {
  cells.push_back(Cell{dim, label, std::move(facets)});
  return static_cast<int>(cells.size()) - 1;
}

void CellComplex::validate() const {
  for (size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].dim < 0) throw input_error("cell dimension must be nonnegative");
    if (cells[c].dim > 0 && cells[c].facets.empty())
      throw input_error("cell '" + cells[c].label + "' of positive dimension has no facet");
    std::set<int> seen;
    for (int f : cells[c].facets) {
      if (f < 0 || static_cast<size_t>(f) >= cells.size())
        throw input_error("facet out of range on cell '" + cells[c].label + "'");
      if (cells[static_cast<size_t>(f)].dim != cells[c].dim - 1)
        throw input_error("facet grading broken at cell '" + cells[c].label + "'");
      if (!seen.insert(f).second)
        throw input_error("repeated facet on cell '" + cells[c].label +
                          "' (loops are not supported in cell complexes)");
    }
  }
}

std::vector<std::pair<int, int>> CellComplex::strict_face_pairs() const {
  // Transitive closure of the covering relation, as a set of pairs.
  const size_t n = cells.size();
  std::vector<std::set<int>> below(n);
  // Process by increasing dimension so closures are ready.
  std::vector<int> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return cells[static_cast<size_t>(a)].dim < cells[static_cast<size_t>(b)].dim;
  });
  for (int c : order) {
    for (int f : cells[static_cast<size_t>(c)].facets) {
      below[static_cast<size_t>(c)].insert(f);
      below[static_cast<size_t>(c)].insert(below[static_cast<size_t>(f)].begin(),
                                           below[static_cast<size_t>(f)].end());
    }
  }
  std::vector<std::pair<int, int>> pairs;
  for (size_t c = 0; c < n; ++c)
    for (int t : below[c]) pairs.emplace_back(static_cast<int>(c), t);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

bool SubdivisionGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& e : edges) {
    adj[static_cast<size_t>(e.from)].push_back(e.to);
    adj[static_cast<size_t>(e.to)].push_back(e.from);
  }
  std::vector<char> seen(vertices.size(), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  size_t count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (int w : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++count;
        q.push_back(w);
      }
  }
  return count == vertices.size();
}

int SubdivisionGraph::least_labeled_vertex() const {
  if (vertices.empty()) throw input_error("empty subdivision graph");
  int best = 0;
  for (size_t v = 1; v < vertices.size(); ++v)
    if (vertices[v].label < vertices[static_cast<size_t>(best)].label)
      best = static_cast<int>(v);
  return best;
}

std::vector<int> SubdivisionGraph::spanning_tree_edges() const {
  return spanning_tree_from(least_labeled_vertex());
}

std::vector<int> SubdivisionGraph::spanning_tree_from(int root) const {
  if (!connected()) throw input_error("subdivision graph must be connected");
  std::vector<std::vector<std::pair<int, int>>> adj(vertices.size());  // (other, edge)
  for (size_t e = 0; e < edges.size(); ++e) {
    adj[static_cast<size_t>(edges[e].from)].emplace_back(edges[e].to, static_cast<int>(e));
    adj[static_cast<size_t>(edges[e].to)].emplace_back(edges[e].from, static_cast<int>(e));
  }
  std::vector<char> seen(vertices.size(), 0);
  std::vector<int> tree;
  std::deque<int> q{root};
  seen[static_cast<size_t>(root)] = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (const auto& [w, e] : adj[static_cast<size_t>(v)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        tree.push_back(e);
        q.push_back(w);
      }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

int SubdivisionGraph::composite_of(int a, int b) const {
  for (const auto& c : composables)
    if (c.a == a && c.b == b) return c.ab;
  return -1;
}

void SubdivisionGraph::validate() const {
  for (const auto& e : edges) {
    if (e.from < 0 || static_cast<size_t>(e.from) >= vertices.size() || e.to < 0 ||
        static_cast<size_t>(e.to) >= vertices.size())
      throw input_error("subdivision edge endpoint out of range");
    if (vertices[static_cast<size_t>(e.from)].dim <= vertices[static_cast<size_t>(e.to)].dim)
      throw input_error("subdivision edges must strictly decrease dimension");
  }
  for (const auto& c : composables) {
    const auto& a = edges[static_cast<size_t>(c.a)];
    const auto& b = edges[static_cast<size_t>(c.b)];
    const auto& ab = edges[static_cast<size_t>(c.ab)];
    if (a.from != b.to) throw input_error("composable pair with i(a) != t(b)");
    if (ab.from != b.from || ab.to != a.to)
      throw input_error("composite endpoints inconsistent");
  }
}

SubdivisionGraph barycentric(const CellComplex& c) {
  c.validate();
  SubdivisionGraph s;
  for (const auto& cell : c.cells) s.vertices.push_back({cell.label, cell.dim});
  std::map<std::pair<int, int>, int> edge_id;
  for (const auto& [from, to] : c.strict_face_pairs()) {
    edge_id[{from, to}] = static_cast<int>(s.edges.size());
    s.edges.push_back({from, to});
  }
  // Composable pairs: chains rho > sigma > tau give b: rho->sigma,
  // a: sigma->tau with composite rho->tau.
  for (size_t a = 0; a < s.edges.size(); ++a)
    for (size_t b = 0; b < s.edges.size(); ++b) {
      if (s.edges[a].from != s.edges[b].to) continue;
      const auto it = edge_id.find({s.edges[b].from, s.edges[a].to});
      if (it == edge_id.end()) throw input_error("face poset is not transitively closed");
      s.composables.push_back({static_cast<int>(a), static_cast<int>(b), it->second});
    }
  s.validate();
  return s;
}

std::string dot_subdivision(const SubdivisionGraph& s) {
  std::ostringstream os;
  os << "digraph subdivision {\n";
  for (size_t v = 0; v < s.vertices.size(); ++v)
    os << "  c" << v << " [label=\"" << s.vertices[v].label << "\"];\n";
  for (const auto& e : s.edges) os << "  c" << e.from << " -> c" << e.to << ";\n";
  os << "}\n";
  return os.str();
}

CellComplex solid_polygon(int sides) {
  if (sides < 3) throw input_error("polygon needs at least 3 sides");
  CellComplex c;
  std::vector<int> vs, es;
  for (int i = 0; i < sides; ++i)
    vs.push_back(c.add_cell(0, "p" + std::to_string(i)));
  for (int i = 0; i < sides; ++i)
    es.push_back(c.add_cell(1, "s" + std::to_string(i),
                            {vs[static_cast<size_t>(i)],
                             vs[static_cast<size_t>((i + 1) % sides)]}));
  c.add_cell(2, "F", es);
  return c;
}

}  // namespace gogkit
