#include "gogkit/serre_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "gogkit/errors.hpp"

namespace gogkit {

int SerreGraph::add_vertex(const std::string& label) {
  vertex_labels.push_back(label);
  return static_cast<int>(vertex_labels.size()) - 1;
}

int SerreGraph::add_edge_pair(int iota, int tau, const std::string& label) {
  const int e = static_cast<int>(edges.size());
  edges.push_back(OrientedEdge{iota, tau, e + 1, label});
  edges.push_back(OrientedEdge{tau, iota, e, label + "~"});
  return e;
}

void SerreGraph::validate() const {
  if (edges.size() % 2 != 0) throw input_error("oriented edges must come in mate pairs");
  for (size_t e = 0; e < edges.size(); ++e) {
    const auto& ed = edges[e];
    if (ed.iota < 0 || static_cast<size_t>(ed.iota) >= vertex_labels.size() ||
        ed.tau < 0 || static_cast<size_t>(ed.tau) >= vertex_labels.size())
      throw input_error("edge endpoint out of range");
    if (ed.mate < 0 || static_cast<size_t>(ed.mate) >= edges.size())
      throw input_error("edge mate out of range");
    const auto& m = edges[static_cast<size_t>(ed.mate)];
    if (m.mate != static_cast<int>(e)) throw input_error("edge involution is not its own inverse");
    if (ed.mate == static_cast<int>(e)) throw input_error("edge involution has a fixed point");
    if (m.iota != ed.tau || m.tau != ed.iota)
      throw input_error("edge endpoints inconsistent under the involution");
  }
}

bool SerreGraph::connected() const {
  if (vertex_labels.empty()) return true;
  std::vector<char> seen(vertex_labels.size(), 0);
  std::deque<int> q{0};
  seen[0] = 1;
  size_t count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (const auto& e : edges)
      if (e.iota == v && !seen[static_cast<size_t>(e.tau)]) {
        seen[static_cast<size_t>(e.tau)] = 1;
        ++count;
        q.push_back(e.tau);
      }
  }
  return count == vertex_labels.size();
}

int SerreGraph::least_labeled_vertex() const {
  if (vertex_labels.empty()) throw input_error("empty graph");
  int best = 0;
  for (size_t v = 1; v < vertex_labels.size(); ++v)
    if (vertex_labels[v] < vertex_labels[static_cast<size_t>(best)]) best = static_cast<int>(v);
  return best;
}

std::vector<int> SerreGraph::spanning_tree_pairs() const {
  if (!connected()) throw input_error("graph must be connected");
  std::vector<char> seen(vertex_labels.size(), 0);
  std::vector<int> tree;
  std::deque<int> q;
  const int root = least_labeled_vertex();
  q.push_back(root);
  seen[static_cast<size_t>(root)] = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (size_t e = 0; e < edges.size(); ++e) {
      if (edges[e].iota != v) continue;
      const int w = edges[e].tau;
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      tree.push_back(pair_of(static_cast<int>(e)));
      q.push_back(w);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

long long SerreGraph::first_betti() const {
  return static_cast<long long>(edge_pair_count()) -
         static_cast<long long>(vertex_count()) + 1;
}

std::string dot_serre_graph(const SerreGraph& g) {
  std::ostringstream os;
  os << "graph serre {\n";
  for (size_t v = 0; v < g.vertex_labels.size(); ++v)
    os << "  v" << v << " [label=\"" << g.vertex_labels[v] << "\"];\n";
  for (size_t e = 0; e < g.edges.size(); e += 2)
    os << "  v" << g.edges[e].iota << " -- v" << g.edges[e].tau << " [label=\""
       << g.edges[e].label << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace gogkit
