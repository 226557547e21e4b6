#include "gogkit/graph_of_groups.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "gogkit/budget.hpp"
#include "gogkit/errors.hpp"

namespace gogkit {

Presentation LocalGroup::presentation() const {
  if (finite()) return table().presentation();
  return symbolic().pres;
}

std::string LocalGroup::describe() const {
  if (finite()) return "finite order " + std::to_string(table().order());
  return "symbolic (" + std::to_string(symbolic().pres.generator_count()) + " generators)";
}

LocalGroup LocalGroup::free_abelian(const std::vector<std::string>& gens) {
  SymbolicGroup s;
  for (const auto& g : gens) s.pres.add_generator(GeneratorSymbol::parse(g));
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      s.pres.add_relator(commutator(Word{{Letter{static_cast<int>(i), +1}}},
                                    Word{{Letter{static_cast<int>(j), +1}}}));
  s.free_abelian_rank = static_cast<int>(gens.size());
  return of(std::move(s));
}

void GraphOfGroups::validate() const {
  graph.validate();
  if (!graph.connected()) throw input_error("graph of groups must be connected");
  if (vertex_groups.size() != graph.vertex_count())
    throw input_error("vertex group count mismatch");
  if (edge_groups.size() != graph.edge_pair_count())
    throw input_error("edge group count mismatch");
  if (edge_maps.size() != graph.edges.size()) throw input_error("edge map count mismatch");
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    const LocalGroup& eg = edge_group(static_cast<int>(e));
    const LocalGroup& vg = vertex_groups[static_cast<size_t>(graph.edges[e].iota)];
    const Presentation ep = eg.presentation();
    const Presentation vp = vg.presentation();
    const auto& images = edge_maps[e].images;
    if (images.size() != ep.generator_count())
      throw input_error("edge map image count mismatch on edge " + graph.edges[e].label);
    for (const Word& w : images)
      for (const Letter& l : w.letters)
        if (l.gen < 0 || static_cast<size_t>(l.gen) >= vp.generator_count())
          throw input_error("edge map image uses unknown vertex generator");
    if (eg.finite() && vg.finite()) {
      // Injectivity by explicit image enumeration.
      std::set<int> image;
      bool closed_under_products = true;
      std::vector<int> gen_images;
      for (const Word& w : images) gen_images.push_back(vg.table().evaluate(w, vp));
      (void)closed_under_products;
      // Enumerate the whole image subgroup and compare orders.
      const std::vector<int> img = vg.table().subgroup_closure(gen_images);
      image.insert(img.begin(), img.end());
      if (static_cast<int>(image.size()) != eg.table().order()) {
        // A monomorphism must preserve the order exactly; verify by the
        // multiplicative check on all edge-group elements.
        throw input_error("edge map is not injective on edge " + graph.edges[e].label);
      }
    }
  }
}

EdgeIndexedGraph edge_indices(const GraphOfGroups& g) {
  EdgeIndexedGraph out;
  out.graph = g.graph;
  out.idx.resize(g.graph.edges.size(), 1);
  for (size_t e = 0; e < g.graph.edges.size(); ++e) {
    const LocalGroup& vg = g.vertex_groups[static_cast<size_t>(g.graph.edges[e].iota)];
    const LocalGroup& eg = g.edge_group(static_cast<int>(e));
    const auto& em = g.edge_maps[e];
    if (vg.finite() && eg.finite()) {
      const Presentation ep = eg.presentation();
      const Presentation vp = vg.presentation();
      std::vector<int> gen_images;
      for (const Word& w : em.images) gen_images.push_back(vg.table().evaluate(w, vp));
      const std::vector<int> sub = vg.table().subgroup_closure(gen_images);
      out.idx[e] = vg.table().subgroup_index(sub);
      if (em.declared_index && *em.declared_index != out.idx[e])
        throw input_error("declared index contradicts coset count on edge " +
                          g.graph.edges[e].label);
      continue;
    }
    if (!em.declared_index)
      throw input_error("symbolic edge needs a declared index on edge " +
                        g.graph.edges[e].label);
    out.idx[e] = *em.declared_index;
    if (out.idx[e] < 1) throw input_error("declared index must be >= 1");
    // Determinant cross-check for free-abelian local groups with integer
    // matrix edge maps of full rank.
    if (!vg.finite() && !eg.finite() && vg.symbolic().free_abelian_rank &&
        eg.symbolic().free_abelian_rank &&
        *vg.symbolic().free_abelian_rank == *eg.symbolic().free_abelian_rank) {
      const int n = *vg.symbolic().free_abelian_rank;
      IntMatrix m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
      for (int col = 0; col < n; ++col)
        for (const Letter& l : em.images[static_cast<size_t>(col)].letters)
          m[static_cast<size_t>(l.gen)][static_cast<size_t>(col)] += l.sign;
      // |det| via the Smith diagonal product (exact).
      Int det = 1;
      for (const Int& d : smith_diagonal(m)) det *= d;
      if (det != 0 && det != Int(out.idx[e]))
        throw input_error("declared index " + std::to_string(out.idx[e]) +
                          " contradicts |det| = " + det.str() + " on edge " +
                          g.graph.edges[e].label);
    }
  }
  return out;
}

std::vector<long long> bass_serre_valences(const EdgeIndexedGraph& e) {
  std::vector<long long> val(e.graph.vertex_count(), 0);
  for (size_t k = 0; k < e.graph.edges.size(); ++k)
    val[static_cast<size_t>(e.graph.edges[k].iota)] += e.idx[k];
  return val;
}

UnimodularReport check_unimodular(const EdgeIndexedGraph& eg) {
  if (!eg.graph.connected()) throw input_error("graph must be connected");
  UnimodularReport rep;
  const std::vector<int> tree = eg.graph.spanning_tree_pairs();
  const std::set<int> tree_set(tree.begin(), tree.end());

  // Tree paths from the root: parent pointers via BFS.
  const int root = eg.graph.least_labeled_vertex();
  std::vector<int> parent_edge(eg.graph.vertex_count(), -1);
  std::vector<char> seen(eg.graph.vertex_count(), 0);
  std::deque<int> q{root};
  seen[static_cast<size_t>(root)] = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    for (size_t e = 0; e < eg.graph.edges.size(); ++e) {
      if (eg.graph.edges[e].iota != v) continue;
      if (!tree_set.count(eg.graph.pair_of(static_cast<int>(e)))) continue;
      const int w = eg.graph.edges[e].tau;
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      parent_edge[static_cast<size_t>(w)] = static_cast<int>(e);
      q.push_back(w);
    }
  }
  auto path_to_root = [&](int v) {
    std::vector<int> edges;  // oriented edges from v up to the root
    while (parent_edge[static_cast<size_t>(v)] >= 0) {
      const int e = parent_edge[static_cast<size_t>(v)];
      edges.push_back(eg.graph.mate(e));  // orientation v -> parent
      v = eg.graph.edges[static_cast<size_t>(e)].iota;
    }
    return edges;
  };

  for (size_t e = 0; e < eg.graph.edges.size(); e += 2) {
    if (tree_set.count(eg.graph.pair_of(static_cast<int>(e)))) continue;
    // Fundamental cycle: root -> iota(e), e, tau(e) -> root.
    std::vector<int> cycle;
    {
      std::vector<int> up = path_to_root(eg.graph.edges[e].iota);
      std::reverse(up.begin(), up.end());
      for (int x : up) cycle.push_back(eg.graph.mate(x));  // root -> iota(e)
      cycle.push_back(static_cast<int>(e));
      for (int x : path_to_root(eg.graph.edges[e].tau)) cycle.push_back(x);
    }
    Rational ratio = 1;
    for (int x : cycle)
      ratio *= Rational(Int(eg.idx[static_cast<size_t>(x)]),
                        Int(eg.idx[static_cast<size_t>(eg.graph.mate(x))]));
    if (ratio != 1) {
      rep.unimodular = false;
      rep.witness_cycle = cycle;
      rep.ratio = ratio;
      return rep;
    }
  }
  return rep;
}

namespace {

// Global generator naming for fundamental groups: keep local tokens that
// are unique across all local groups, suffix the rest with the vertex
// label.
struct NameAllocator {
  std::set<std::string> used;

  std::string allocate(const std::string& want, const std::string& suffix) {
    if (used.insert(want).second) return want;
    std::string name = want + "_" + suffix;
    int k = 2;
    while (!used.insert(name).second) name = want + "_" + suffix + std::to_string(k++);
    return name;
  }
};

}  // namespace

Presentation fundamental_group(const GraphOfGroups& g,
                               std::optional<std::vector<int>> spanning_tree_pairs) {
  g.validate();
  std::vector<int> tree =
      spanning_tree_pairs ? *spanning_tree_pairs : g.graph.spanning_tree_pairs();
  {
    // A spanning tree has exactly V-1 pairs and touches every vertex.
    if (tree.size() != g.graph.vertex_count() - 1)
      throw input_error("spanning tree pair count mismatch");
  }
  const std::set<int> tree_set(tree.begin(), tree.end());

  Presentation out;
  NameAllocator names;
  // Local generator ids in the output, per vertex.
  std::vector<std::vector<int>> vgen_ids(g.graph.vertex_count());
  std::vector<Presentation> vpres(g.graph.vertex_count());
  for (size_t v = 0; v < g.graph.vertex_count(); ++v) {
    vpres[v] = g.vertex_groups[v].presentation();
    for (const auto& gs : vpres[v].generators) {
      const std::string name = names.allocate(gs.token(), g.graph.vertex_labels[v]);
      vgen_ids[v].push_back(out.add_generator(GeneratorSymbol::parse(name)));
    }
  }
  // Stable letters for non-tree pairs; canonical orientation is the one
  // whose iota vertex has the smaller label (first-stored wins ties).
  std::vector<int> stable(g.graph.edge_pair_count(), -1);  // output gen id
  std::vector<int> chosen(g.graph.edge_pair_count(), -1);  // oriented edge owning t_e
  long long n_nontree = static_cast<long long>(g.graph.edge_pair_count()) -
                        static_cast<long long>(tree.size());
  int t_counter = 1;
  for (size_t p = 0; p < g.graph.edge_pair_count(); ++p) {
    const int fwd = static_cast<int>(2 * p);
    const int bwd = fwd + 1;
    const std::string& li = g.graph.vertex_labels[static_cast<size_t>(g.graph.edges[static_cast<size_t>(fwd)].iota)];
    const std::string& lt = g.graph.vertex_labels[static_cast<size_t>(g.graph.edges[static_cast<size_t>(bwd)].iota)];
    chosen[p] = lt < li ? bwd : fwd;
    if (tree_set.count(static_cast<int>(p))) continue;
    const std::string want = n_nontree == 1 ? "t" : "t" + std::to_string(t_counter++);
    const std::string name =
        names.allocate(want, g.graph.edges[static_cast<size_t>(fwd)].label);
    stable[p] = out.add_generator(GeneratorSymbol::parse(name));
  }

  // Local relations.
  for (size_t v = 0; v < g.graph.vertex_count(); ++v)
    for (const Word& r : vpres[v].relators) out.add_relator(relabel(r, vgen_ids[v]));

  // Edge relations: t_e alpha_mate(x) t_e^-1 alpha_e(x)^-1 per edge-group
  // generator x, with t_e = 1 on tree pairs.
  for (size_t p = 0; p < g.graph.edge_pair_count(); ++p) {
    const int e = chosen[p];
    const int m = g.graph.mate(e);
    const int vi = g.graph.edges[static_cast<size_t>(e)].iota;
    const int vm = g.graph.edges[static_cast<size_t>(m)].iota;
    const size_t ngens = g.edge_groups[p].presentation().generator_count();
    for (size_t x = 0; x < ngens; ++x) {
      const Word img_e = relabel(g.edge_maps[static_cast<size_t>(e)].images[x],
                                 vgen_ids[static_cast<size_t>(vi)]);
      const Word img_m = relabel(g.edge_maps[static_cast<size_t>(m)].images[x],
                                 vgen_ids[static_cast<size_t>(vm)]);
      Word rel;
      if (stable[p] >= 0) {
        const Word t{{Letter{stable[p], +1}}};
        rel = concat(concat(t, img_m), concat(inverse(t), inverse(img_e)));
      } else {
        rel = concat(img_m, inverse(img_e));
      }
      out.add_relator(rel);
    }
  }
  return out;
}

Rational serre_covolume(const GraphOfGroups& g) {
  Rational sum = 0;
  for (size_t v = 0; v < g.graph.vertex_count(); ++v) {
    if (!g.vertex_groups[v].finite())
      throw input_error("serre_covolume requires finite vertex groups; use covolume_sum");
    sum += Rational(1, g.vertex_groups[v].table().order());
  }
  return sum;
}

TreeBall develop_tree_ball(const GraphOfGroups& g, int base_vertex, int radius,
                           long long budget) {
  g.validate();
  if (radius < 0) throw input_error("radius must be nonnegative");
  if (budget <= 0) budget = budgets::ball_nodes();
  for (const auto& lg : g.vertex_groups)
    if (!lg.finite()) throw input_error("develop_tree_ball requires finite local groups");
  for (const auto& lg : g.edge_groups)
    if (!lg.finite()) throw input_error("develop_tree_ball requires finite local groups");

  // Per oriented edge: left-coset reps of the image subgroup in the iota
  // vertex group.
  std::vector<std::vector<int>> reps(g.graph.edges.size());
  for (size_t e = 0; e < g.graph.edges.size(); ++e) {
    const FiniteGroup& vg = g.vertex_groups[static_cast<size_t>(g.graph.edges[e].iota)].table();
    const Presentation ep = g.edge_group(static_cast<int>(e)).presentation();
    std::vector<int> gen_images;
    for (const Word& w : g.edge_maps[e].images)
      gen_images.push_back(vg.evaluate(w, g.vertex_groups[static_cast<size_t>(g.graph.edges[e].iota)].presentation()));
    reps[e] = vg.left_coset_reps(vg.subgroup_closure(gen_images));
  }

  TreeBall ball;
  ball.radius = radius;
  ball.nodes.push_back(TreeBall::Node{base_vertex, 0, -1, -1,
                                      g.graph.vertex_labels[static_cast<size_t>(base_vertex)],
                                      {}, radius > 0});
  for (size_t n = 0; n < ball.nodes.size(); ++n) {
    if (ball.nodes[n].depth >= radius) continue;
    ball.nodes[n].interior = true;
    const int v = ball.nodes[n].orbit_vertex;
    const int arrived = ball.nodes[n].parent_edge;  // oriented edge into this node
    const int back = arrived >= 0 ? g.graph.mate(arrived) : -1;
    for (size_t e = 0; e < g.graph.edges.size(); ++e) {
      if (g.graph.edges[e].iota != v) continue;
      const FiniteGroup& vg = g.vertex_groups[static_cast<size_t>(v)].table();
      for (size_t ci = 0; ci < reps[e].size(); ++ci) {
        // The identity coset along the reverse of the arrival edge is the
        // parent link.
        if (static_cast<int>(e) == back && reps[e][ci] == vg.identity()) continue;
        if (static_cast<long long>(ball.nodes.size()) >= budget)
          throw budget_error("tree ball exceeded node budget");
        TreeBall::Node child;
        child.orbit_vertex = g.graph.edges[e].tau;
        child.depth = ball.nodes[n].depth + 1;
        child.parent = static_cast<int>(n);
        child.parent_edge = static_cast<int>(e);
        child.label = ball.nodes[n].label + "/" + g.graph.edges[e].label + "[" +
                      vg.element_name(reps[e][ci]) + "]";
        ball.nodes[n].children.push_back(static_cast<int>(ball.nodes.size()));
        ball.nodes.push_back(std::move(child));
      }
    }
  }
  return ball;
}

std::string dot_edge_indexed(const EdgeIndexedGraph& g) {
  std::ostringstream os;
  os << "graph edge_indexed {\n";
  for (size_t v = 0; v < g.graph.vertex_labels.size(); ++v)
    os << "  v" << v << " [label=\"" << g.graph.vertex_labels[v] << "\"];\n";
  for (size_t e = 0; e < g.graph.edges.size(); e += 2)
    os << "  v" << g.graph.edges[e].iota << " -- v" << g.graph.edges[e].tau << " [label=\""
       << g.idx[e] << "|" << g.idx[e + 1] << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string dot_tree_ball(const TreeBall& ball, const SerreGraph& g) {
  std::ostringstream os;
  os << "graph tree_ball {\n";
  for (size_t n = 0; n < ball.nodes.size(); ++n)
    os << "  n" << n << " [label=\""
       << g.vertex_labels[static_cast<size_t>(ball.nodes[n].orbit_vertex)] << " d"
       << ball.nodes[n].depth << "\"];\n";
  for (size_t n = 0; n < ball.nodes.size(); ++n)
    if (ball.nodes[n].parent >= 0) os << "  n" << ball.nodes[n].parent << " -- n" << n << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gogkit
