#include <doctest.h>

#include <random>
#include <set>

#include "gogkit/cell_complex.hpp"
#include "gogkit/complex_of_groups.hpp"
#include "gogkit/covolume.hpp"
#include "gogkit/errors.hpp"
#include "gogkit/examples.hpp"
#include "gogkit/fixtures.hpp"
#include "gogkit/homcount.hpp"
#include "gogkit/thomas.hpp"
#include "gogkit/tietze.hpp"

using namespace gogkit;

namespace {

// Complex of groups over a cell complex with the given local groups.
ComplexOfGroups trivial_complex_over(const CellComplex& c) {
  ComplexOfGroups cog;
  cog.sub = barycentric(c);
  cog.locals.assign(cog.sub.vertices.size(), LocalGroup::trivial());
  cog.psi.assign(cog.sub.edges.size(), {});
  cog.twists.assign(cog.sub.composables.size(), -1);
  return cog;
}

CellComplex two_squares_sharing_an_edge() {
  CellComplex c;
  const int v1 = c.add_cell(0, "v1");
  const int v2 = c.add_cell(0, "v2");
  const int v3 = c.add_cell(0, "v3");
  const int v4 = c.add_cell(0, "v4");
  const int v5 = c.add_cell(0, "v5");
  const int v6 = c.add_cell(0, "v6");
  const int e1 = c.add_cell(1, "e1", {v1, v2});
  const int e2 = c.add_cell(1, "e2", {v2, v3});
  const int e3 = c.add_cell(1, "e3", {v3, v4});
  const int e4 = c.add_cell(1, "e4", {v4, v1});
  const int e5 = c.add_cell(1, "e5", {v2, v5});
  const int e6 = c.add_cell(1, "e6", {v5, v6});
  const int e7 = c.add_cell(1, "e7", {v6, v1});
  c.add_cell(2, "A", {e1, e2, e3, e4});
  c.add_cell(2, "B", {e1, e5, e6, e7});
  return c;
}

}  // namespace

TEST_CASE("barycentric counts for the solid pentagon") {
  const SubdivisionGraph s = barycentric(solid_polygon(5));
  CHECK(s.vertices.size() == 11);
  CHECK(s.edges.size() == 20);
  CHECK(s.composables.size() == 10);
}

TEST_CASE("barycentric counts for degenerate complexes") {
  CellComplex pt;
  pt.add_cell(0, "v");
  const SubdivisionGraph sp = barycentric(pt);
  CHECK(sp.vertices.size() == 1);
  CHECK(sp.edges.empty());

  CellComplex seg;
  const int v = seg.add_cell(0, "v");
  const int w = seg.add_cell(0, "w");
  seg.add_cell(1, "e", {v, w});
  const SubdivisionGraph ss = barycentric(seg);
  CHECK(ss.vertices.size() == 3);
  CHECK(ss.edges.size() == 2);
  CHECK(ss.composables.empty());
}

TEST_CASE("barycentric edge and composable counts match exhaustive enumeration") {
  // Random small graded posets built as stacked complexes.
  std::mt19937 rng(515);
  for (int trial = 0; trial < 20; ++trial) {
    CellComplex c;
    const int nv = 2 + static_cast<int>(rng() % 3);
    std::vector<int> vs, es;
    for (int i = 0; i < nv; ++i) vs.push_back(c.add_cell(0, "v" + std::to_string(i)));
    const int ne = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < ne; ++i) {
      int a = static_cast<int>(rng() % static_cast<unsigned>(nv));
      int b = static_cast<int>(rng() % static_cast<unsigned>(nv));
      if (a == b) b = (b + 1) % nv;
      es.push_back(c.add_cell(1, "e" + std::to_string(i), {vs[static_cast<size_t>(a)],
                                                           vs[static_cast<size_t>(b)]}));
    }
    if (rng() % 2 && es.size() >= 3) c.add_cell(2, "F", {es[0], es[1], es[2]});
    const SubdivisionGraph s = barycentric(c);
    CHECK(s.edges.size() == c.strict_face_pairs().size());
    // Composable pairs = 2-chains, counted exhaustively.
    size_t chains = 0;
    const auto pairs = c.strict_face_pairs();
    std::set<std::pair<int, int>> pair_set(pairs.begin(), pairs.end());
    for (const auto& [s1, t1] : pairs)
      for (const auto& [s2, t2] : pairs)
        if (t2 == s1) ++chains;
    CHECK(s.composables.size() == chains);
    s.validate();
  }
}

TEST_CASE("cocycle check passes on simple complexes and reports corrupted twists") {
  ComplexOfGroups cog = trivial_complex_over(solid_polygon(5));
  CHECK(cocycle_check(cog).ok);

  // Z3 chains into S3 vertex groups; corrupting a twist by a transposition
  // breaks Ad(g) psi_ab = psi_a psi_b because conjugation inverts the
  // 3-cycle.
  ComplexOfGroups cx;
  cx.sub = cog.sub;
  for (size_t v = 0; v < cx.sub.vertices.size(); ++v) {
    if (cx.sub.vertices[v].dim == 0)
      cx.locals.push_back(LocalGroup::of(FiniteGroup::symmetric3()));
    else
      cx.locals.push_back(LocalGroup::of(FiniteGroup::cyclic(3, "z" + std::to_string(v))));
  }
  for (size_t e = 0; e < cx.sub.edges.size(); ++e) {
    const auto& to = cx.locals[static_cast<size_t>(cx.sub.edges[e].to)];
    const auto& from = cx.locals[static_cast<size_t>(cx.sub.edges[e].from)];
    const bool to_vertex = cx.sub.vertices[static_cast<size_t>(cx.sub.edges[e].to)].dim == 0;
    const std::string target_gen =
        to_vertex ? "c" : to.presentation().generators[0].token();
    cx.psi.push_back({parse_word(target_gen, to.presentation())});
    (void)from;
  }
  cx.twists.assign(cx.sub.composables.size(), -1);
  CHECK(cocycle_check(cx).ok);
  // Corrupt one twist whose target is an S3 vertex group: element "s".
  for (size_t k = 0; k < cx.sub.composables.size(); ++k) {
    const int tau = cx.sub.edges[static_cast<size_t>(cx.sub.composables[k].a)].to;
    if (cx.sub.vertices[static_cast<size_t>(tau)].dim == 0) {
      int s_elem = -1;
      const FiniteGroup& g = cx.locals[static_cast<size_t>(tau)].table();
      for (const auto& [name, el] : g.generators())
        if (name == "s") s_elem = el;
      cx.twists[k] = s_elem;
      break;
    }
  }
  const CocycleReport bad = cocycle_check(cx);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.failure.empty());
}

TEST_CASE("F1 of the LM loop: circle subdivision with the right local groups") {
  const F1Image f1 = F1(lm_gog());
  CHECK(f1.cog.sub.vertices.size() == 2);  // vertex + midpoint
  CHECK(f1.cog.sub.edges.size() == 2);
  CHECK(f1.cog.locals[0].presentation().generator_count() == 2);  // Z^2
  CHECK(f1.cog.locals[1].presentation().generator_count() == 2);  // L1
  CHECK(f1.cog.simple());
}

namespace {
GraphOfGroups theta_graph() {
  GraphOfGroups g;
  const int v = g.graph.add_vertex("v");
  const int w = g.graph.add_vertex("w");
  for (int i = 0; i < 2; ++i) g.graph.add_edge_pair(v, w, "e" + std::to_string(i));
  g.vertex_groups = {LocalGroup::of(FiniteGroup::cyclic(4, "a")),
                     LocalGroup::of(FiniteGroup::cyclic(2, "b"))};
  for (int i = 0; i < 2; ++i) {
    g.edge_groups.push_back(LocalGroup::of(FiniteGroup::cyclic(2, "c" + std::to_string(i))));
    GraphOfGroups::EdgeMap to_v, to_w;
    to_v.images = {parse_word("a^2", g.vertex_groups[0].presentation())};
    to_w.images = {parse_word("b", g.vertex_groups[1].presentation())};
    g.edge_maps.push_back(to_v);
    g.edge_maps.push_back(to_w);
  }
  return g;
}
}  // namespace

TEST_CASE("functor F1 preserves the fundamental group at fingerprint level") {
  const std::vector<std::string> targets{"Z2", "Z3", "S3"};
  std::vector<GraphOfGroups> cases = {bk_gamma_gog(2), theta_graph()};
  for (unsigned seed : {11u, 12u, 13u}) cases.push_back(random_finite_gog(seed, 3));
  for (const auto& g : cases) {
    const Fingerprint direct = fingerprint(fundamental_group(g), targets);
    const Presentation via_complex =
        simplify_presentation(fundamental_group_cog(F1(g).cog));
    CHECK(fingerprint(via_complex, targets) == direct);
  }
}

TEST_CASE("F1 of the LM loop has the LM fingerprint") {
  const std::vector<std::string> targets{"Z2", "Z3", "S3"};
  const Presentation p = simplify_presentation(fundamental_group_cog(F1(lm_gog()).cog));
  CHECK(fingerprint(p, targets) ==
        fingerprint(example_registry("lm").presentation, targets));
}

TEST_CASE("fundamental group of a simply connected trivial complex is trivial") {
  const ComplexOfGroups cog = trivial_complex_over(solid_polygon(5));
  const Presentation p = simplify_presentation(fundamental_group_cog(cog));
  CHECK(p.generator_count() == 0);
  CHECK(abelianization(fundamental_group_cog(cog)).free_rank == 0);
}

TEST_CASE("development: trivial groups on a simply connected complex reproduce it") {
  for (const CellComplex& c : {solid_polygon(5), two_squares_sharing_an_edge()}) {
    const ComplexOfGroups cog = trivial_complex_over(c);
    const DevBall ball = develop_ball(cog, 0, 64);
    CHECK(ball.developable);
    CHECK(ball.cells.size() == c.cells.size());
    // Type consistency: each class appears exactly once, and incidences
    // project onto subdivision edges.
    std::set<int> classes;
    for (const auto& cell : ball.cells) CHECK(classes.insert(cell.cls).second);
    for (const auto& inc : ball.incidences) {
      const auto& e = cog.sub.edges[static_cast<size_t>(inc.edge)];
      CHECK(ball.cells[static_cast<size_t>(inc.upper)].cls == e.from);
      CHECK(ball.cells[static_cast<size_t>(inc.lower)].cls == e.to);
    }
  }
}

TEST_CASE("development of the circle with trivial groups is a line") {
  CellComplex circle;
  const int v = circle.add_cell(0, "v");
  const int w = circle.add_cell(0, "w");
  circle.add_cell(1, "e", {v, w});
  circle.add_cell(1, "f", {v, w});
  const ComplexOfGroups cog = trivial_complex_over(circle);
  const DevBall ball = develop_ball(cog, 0, 3);
  CHECK(ball.developable);
  CHECK(ball.cells.size() == 7);  // radius-3 segment of the line
  for (const auto& cell : ball.cells) CHECK(cell.depth <= 3);
}

TEST_CASE("development: Z2 at one endpoint of an interval gives two chambers") {
  CellComplex seg;
  const int v = seg.add_cell(0, "v");
  const int w = seg.add_cell(0, "w");
  seg.add_cell(1, "e", {v, w});
  ComplexOfGroups cog;
  cog.sub = barycentric(seg);
  for (size_t k = 0; k < cog.sub.vertices.size(); ++k) {
    if (cog.sub.vertices[k].label == "v")
      cog.locals.push_back(LocalGroup::of(FiniteGroup::cyclic(2, "s")));
    else
      cog.locals.push_back(LocalGroup::trivial());
  }
  cog.psi.assign(cog.sub.edges.size(), {});
  cog.twists.assign(cog.sub.composables.size(), -1);
  const DevBall ball = develop_ball(cog, 0, 4);
  CHECK(ball.developable);
  CHECK(ball.cells.size() == 5);  // w' - e' - v - e - w
}

TEST_CASE("development of a square with Z2 at one corner doubles everything but the corner") {
  CellComplex c;
  const int v1 = c.add_cell(0, "v1");
  const int v2 = c.add_cell(0, "v2");
  const int v3 = c.add_cell(0, "v3");
  const int v4 = c.add_cell(0, "v4");
  const int e1 = c.add_cell(1, "e1", {v1, v2});
  const int e2 = c.add_cell(1, "e2", {v2, v3});
  const int e3 = c.add_cell(1, "e3", {v3, v4});
  const int e4 = c.add_cell(1, "e4", {v4, v1});
  c.add_cell(2, "F", {e1, e2, e3, e4});
  ComplexOfGroups cog;
  cog.sub = barycentric(c);
  for (size_t k = 0; k < cog.sub.vertices.size(); ++k) {
    if (cog.sub.vertices[k].label == "v1")
      cog.locals.push_back(LocalGroup::of(FiniteGroup::cyclic(2, "s")));
    else
      cog.locals.push_back(LocalGroup::trivial());
  }
  cog.psi.assign(cog.sub.edges.size(), {});
  cog.twists.assign(cog.sub.composables.size(), -1);
  const DevBall ball = develop_ball(cog, 0, 16);
  CHECK(ball.developable);
  CHECK(ball.cells.size() == 17);  // 2*9 - 1
}

TEST_CASE("development ball of F1 matches the Bass-Serre tree ball layer counts") {
  // For 1-dimensional complexes the development is the Bass-Serre tree.
  const GraphOfGroups g = bk_gamma_gog(2);
  const F1Image f1 = F1(g);
  const DevBall ball = develop_ball(f1.cog, f1.vertex_class[0], 2);
  CHECK(ball.developable);
  // Radius-2 ball from the vertex: center + 4 midpoints + their far ends
  // merge back (loop): count vertex-class cells at depth 2.
  const TreeBall tb = develop_tree_ball(g, 0, 1);
  long long midpoints = 0;
  for (const auto& cell : ball.cells)
    if (cell.depth == 1) ++midpoints;
  CHECK(midpoints == static_cast<long long>(tb.nodes.size()) - 1);  // 4 edges at the center
}

TEST_CASE("complex covolume sum shares the covolume kernel") {
  CHECK(covolume_sum({{Rational(1, 2), 1}, {Rational(1, 3), 1}, {Rational(1, 6), 1}}).value ==
        1);
}
