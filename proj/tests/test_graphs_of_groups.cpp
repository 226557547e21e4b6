#include <doctest.h>

#include <random>

#include "gogkit/covolume.hpp"
#include "gogkit/errors.hpp"
#include "gogkit/examples.hpp"
#include "gogkit/fixtures.hpp"
#include "gogkit/graph_of_groups.hpp"
#include "gogkit/homcount.hpp"

using namespace gogkit;

namespace {

// Z2 * Z2 as a single edge of groups with trivial edge group.
GraphOfGroups infinite_dihedral_gog() {
  GraphOfGroups g;
  const int v = g.graph.add_vertex("v");
  const int w = g.graph.add_vertex("w");
  g.graph.add_edge_pair(v, w, "e");
  g.vertex_groups.push_back(LocalGroup::of(FiniteGroup::cyclic(2, "a")));
  g.vertex_groups.push_back(LocalGroup::of(FiniteGroup::cyclic(2, "b")));
  g.edge_groups.push_back(LocalGroup::trivial());
  g.edge_maps = {GraphOfGroups::EdgeMap{}, GraphOfGroups::EdgeMap{}};
  return g;
}

GraphOfGroups trivial_edge_gog() {
  GraphOfGroups g;
  const int v = g.graph.add_vertex("v");
  const int w = g.graph.add_vertex("w");
  g.graph.add_edge_pair(v, w, "e");
  g.vertex_groups = {LocalGroup::trivial(), LocalGroup::trivial()};
  g.edge_groups = {LocalGroup::trivial()};
  g.edge_maps = {GraphOfGroups::EdgeMap{}, GraphOfGroups::EdgeMap{}};
  return g;
}

EdgeIndexedGraph loop_with_indices(long long fwd, long long bwd) {
  GraphOfGroups g;
  const int v = g.graph.add_vertex("v");
  g.graph.add_edge_pair(v, v, "e");
  EdgeIndexedGraph eg;
  eg.graph = g.graph;
  eg.idx = {fwd, bwd};
  return eg;
}

}  // namespace

TEST_CASE("edge indices: Bass-Kulkarni loop has idx (2,2)") {
  const EdgeIndexedGraph eg = edge_indices(bk_gamma_gog(3));
  CHECK(eg.idx == std::vector<long long>{2, 2});
  CHECK(bass_serre_valences(eg) == std::vector<long long>{4});
}

TEST_CASE("edge indices: LM loop is declared (5,5) and passes the determinant check") {
  const EdgeIndexedGraph eg = edge_indices(lm_gog());
  CHECK(eg.idx == std::vector<long long>{5, 5});
  CHECK(bass_serre_valences(eg) == std::vector<long long>{10});
}

TEST_CASE("edge indices: amalgam over identity maps is all ones") {
  GraphOfGroups g;
  const int v = g.graph.add_vertex("v");
  const int w = g.graph.add_vertex("w");
  g.graph.add_edge_pair(v, w, "e");
  g.vertex_groups = {LocalGroup::of(FiniteGroup::cyclic(3, "a")),
                     LocalGroup::of(FiniteGroup::cyclic(3, "b"))};
  g.edge_groups = {LocalGroup::of(FiniteGroup::cyclic(3, "c"))};
  GraphOfGroups::EdgeMap to_v, to_w;
  to_v.images = {parse_word("a", g.vertex_groups[0].presentation())};
  to_w.images = {parse_word("b", g.vertex_groups[1].presentation())};
  g.edge_maps = {to_v, to_w};
  const EdgeIndexedGraph eg = edge_indices(g);
  CHECK(eg.idx == std::vector<long long>{1, 1});
}

TEST_CASE("declared index contradicting the determinant is rejected") {
  GraphOfGroups g = lm_gog();
  g.edge_maps[0].declared_index = 7;
  CHECK_THROWS_AS(edge_indices(g), input_error);
}

TEST_CASE("gamma_n loop has valence 10n") {
  for (long long n : {2, 3, 5}) {
    const EdgeIndexedGraph eg = edge_indices(gamma_n_gog(n));
    CHECK(bass_serre_valences(eg) == std::vector<long long>{10 * n});
  }
}

TEST_CASE("unimodularity: balanced loops pass, the (1,2) loop fails with a witness") {
  CHECK(check_unimodular(loop_with_indices(5, 5)).unimodular);
  CHECK(check_unimodular(loop_with_indices(2, 2)).unimodular);
  const UnimodularReport bad = check_unimodular(loop_with_indices(1, 2));
  CHECK_FALSE(bad.unimodular);
  CHECK_FALSE(bad.witness_cycle.empty());
  CHECK(bad.ratio == Rational(1, 2));
}

TEST_CASE("unimodularity: trees are vacuously unimodular") {
  const EdgeIndexedGraph eg = edge_indices(infinite_dihedral_gog());
  CHECK(check_unimodular(eg).unimodular);
}

TEST_CASE("unimodularity verdict is independent of the spanning tree") {
  // Relabeling vertices moves the BFS root and reshuffles the cycle
  // basis; the verdict must not change.
  std::mt19937 rng(321);
  for (int trial = 0; trial < 25; ++trial) {
    EdgeIndexedGraph eg;
    const int nv = 2 + static_cast<int>(rng() % 3);
    for (int v = 0; v < nv; ++v) eg.graph.add_vertex("v" + std::to_string(v));
    for (int v = 1; v < nv; ++v)
      eg.graph.add_edge_pair(static_cast<int>(rng() % static_cast<unsigned>(v)), v,
                             "e" + std::to_string(v));
    for (int extra = 0; extra < 2; ++extra)
      eg.graph.add_edge_pair(static_cast<int>(rng() % static_cast<unsigned>(nv)),
                             static_cast<int>(rng() % static_cast<unsigned>(nv)),
                             "x" + std::to_string(extra));
    eg.idx.clear();
    for (size_t e = 0; e < eg.graph.edges.size(); ++e)
      eg.idx.push_back(1 + static_cast<long long>(rng() % 3));
    const bool verdict = check_unimodular(eg).unimodular;
    for (int shift = 1; shift < nv; ++shift) {
      EdgeIndexedGraph moved = eg;
      for (int v = 0; v < nv; ++v)
        moved.graph.vertex_labels[static_cast<size_t>(v)] =
            "v" + std::to_string((v + shift) % nv);
      CHECK(check_unimodular(moved).unimodular == verdict);
    }
  }
}

TEST_CASE("fundamental group of the LM loop is the LM presentation verbatim") {
  const Presentation p = fundamental_group(lm_gog());
  const Presentation expected = example_registry("lm").presentation;
  CHECK(presentation_json(p) == presentation_json(expected));
}

TEST_CASE("fundamental group of the Bass-Kulkarni loop matches the registry") {
  for (long long r : {1, 2, 4}) {
    const Presentation p = fundamental_group(bk_gamma_gog(r));
    ExampleParams params;
    params.r = r;
    const Presentation expected = example_registry("bk_gamma", params).presentation;
    CHECK(presentation_json(p) == presentation_json(expected));
  }
}

TEST_CASE("fundamental group of a trivial edge is the trivial presentation") {
  const Presentation p = fundamental_group(trivial_edge_gog());
  CHECK(p.generator_count() == 0);
  CHECK(p.relator_count() == 0);
}

TEST_CASE("fundamental group is spanning-tree independent at fingerprint level") {
  // Theta graph: two vertices joined by three edges, cyclic local groups.
  GraphOfGroups g;
  const int v = g.graph.add_vertex("v");
  const int w = g.graph.add_vertex("w");
  for (int i = 0; i < 3; ++i) g.graph.add_edge_pair(v, w, "e" + std::to_string(i));
  g.vertex_groups = {LocalGroup::of(FiniteGroup::cyclic(4, "a")),
                     LocalGroup::of(FiniteGroup::cyclic(6, "b"))};
  for (int i = 0; i < 3; ++i) {
    g.edge_groups.push_back(LocalGroup::of(FiniteGroup::cyclic(2, "c" + std::to_string(i))));
    GraphOfGroups::EdgeMap to_v, to_w;
    to_v.images = {parse_word("a^2", g.vertex_groups[0].presentation())};
    to_w.images = {parse_word("b^3", g.vertex_groups[1].presentation())};
    g.edge_maps.push_back(to_v);
    g.edge_maps.push_back(to_w);
  }
  const std::vector<std::string> targets{"Z2", "Z3", "S3"};
  std::optional<Fingerprint> first;
  for (int tree = 0; tree < 3; ++tree) {
    const Presentation p = fundamental_group(g, std::vector<int>{tree});
    const Fingerprint fp = fingerprint(p, targets);
    if (!first) {
      first = fp;
    } else {
      CHECK(fp == *first);
    }
  }
}

TEST_CASE("serre covolume of the towers") {
  CHECK(serre_covolume(bk_gamma_gog(1)) == Rational(1, 2));
  CHECK(serre_covolume(bk_gamma_gog(5)) == Rational(1, 32));
  CHECK(serre_covolume(bk_lambda_gog(5)) == Rational(2, 32));
  CHECK(serre_covolume(trivial_edge_gog()) == Rational(2));
  CHECK_THROWS_AS(serre_covolume(lm_gog()), input_error);
}

TEST_CASE("covolume_sum direct and tail cases") {
  CHECK(covolume_sum({{Rational(1, 2), 1}, {Rational(1, 4), 2}}).value == Rational(5, 8));
  CHECK(covolume_sum({{Rational(1, 32), 1}, {Rational(1, 32), 1}}).value == Rational(2, 32));
  const CovolumeResult geo =
      covolume_sum({}, GeometricTail{Rational(1, 2), Rational(1, 2)});
  CHECK(geo.converged);
  CHECK(geo.value == 1);
  const CovolumeResult div =
      covolume_sum({}, GeometricTail{Rational(1, 2), Rational(3, 2)});
  CHECK_FALSE(div.converged);
  CHECK_THROWS_AS(covolume_sum({{Rational(1), 1}}, {}, true), input_error);
  CHECK(serre_covolume(bk_lambda_gog(4)) ==
        covolume_sum({{Rational(1, 16), 1}, {Rational(1, 16), 1}}).value);
}

TEST_CASE("tree ball: Bass-Kulkarni radius 1 is a 4-star") {
  const TreeBall ball = develop_tree_ball(bk_gamma_gog(2), 0, 1);
  CHECK(ball.nodes.size() == 5);
  CHECK(ball.valence(0) == 4);
  for (size_t n = 1; n < ball.nodes.size(); ++n) CHECK(ball.nodes[n].depth == 1);
}

TEST_CASE("tree ball: trivial groups on a single edge give one edge only") {
  const TreeBall ball = develop_tree_ball(trivial_edge_gog(), 0, 5);
  CHECK(ball.nodes.size() == 2);
}

TEST_CASE("tree ball: Z2 * Z2 develops to a line segment") {
  const TreeBall ball = develop_tree_ball(infinite_dihedral_gog(), 0, 2);
  REQUIRE(ball.nodes.size() == 5);
  long long interior_count = 0;
  for (size_t n = 0; n < ball.nodes.size(); ++n) {
    if (ball.nodes[n].interior) {
      CHECK(ball.valence(static_cast<int>(n)) == 2);
      ++interior_count;
    }
  }
  CHECK(interior_count == 3);
}

TEST_CASE("tree ball development trips its node budget") {
  CHECK_THROWS_AS(develop_tree_ball(bk_gamma_gog(3), 0, 6, 10), budget_error);
}

TEST_CASE("tree ball interior valences equal the edge-index sums of their orbits") {
  const std::vector<GraphOfGroups> cases = {bk_gamma_gog(2), bk_gamma_gog(3),
                                            infinite_dihedral_gog(), random_finite_gog(7),
                                            random_finite_gog(8)};
  for (const auto& g : cases) {
    const EdgeIndexedGraph eg = edge_indices(g);
    const std::vector<long long> val = bass_serre_valences(eg);
    const TreeBall ball = develop_tree_ball(g, 0, 3, 500000);
    for (size_t n = 0; n < ball.nodes.size(); ++n)
      if (ball.nodes[n].interior)
        CHECK(ball.valence(static_cast<int>(n)) ==
              val[static_cast<size_t>(ball.nodes[n].orbit_vertex)]);
  }
}

TEST_CASE("abelianization free rank dominates the quotient graph's first Betti number") {
  const std::vector<GraphOfGroups> cases = {lm_gog(), bk_gamma_gog(2), gamma_n_gog(3),
                                            bk_lambda_gog(2), random_finite_gog(21),
                                            random_finite_gog(22), random_finite_gog(23)};
  for (const auto& g : cases) {
    const Presentation p = fundamental_group(g);
    CHECK(abelianization(p).free_rank >= g.graph.first_betti());
  }
}

TEST_CASE("tower covolumes") {
  CHECK(tower_covolume(2, 1) == Rational(1, 2));
  CHECK(tower_covolume(2, 2) == Rational(1, 8));
  // Ratio identity: consecutive tower levels differ by 2^(r^{s+1} - r^s).
  for (long long r : {2, 3}) {
    for (long long s : {1, 2}) {
      const Rational ratio = tower_covolume(r, s) / tower_covolume(r, s + 1);
      const Int expected =
          int_pow(Int(2), int_pow(Int(r), Int(s + 1)) - int_pow(Int(r), Int(s)));
      CHECK(ratio == Rational(expected));
    }
  }
}

TEST_CASE("registry metadata: gamma_n Tietze counts and valence") {
  for (long long n = 2; n <= 8; ++n) {
    ExampleParams params;
    params.n = n;
    const Example ex = example_registry("gamma_n", params);
    CHECK(ex.presentation.generator_count() == 3);
    CHECK(ex.presentation.relator_count() ==
          static_cast<size_t>(n * (n - 1) / 2 + 3));
    CHECK(ex.metadata.valence == 10 * n);
  }
  ExampleParams p3;
  p3.n = 3;
  CHECK(example_registry("gamma_n", p3).presentation.relator_count() == 6);
  ExampleParams p4;
  p4.n = 4;
  CHECK(example_registry("gamma_n", p4).presentation.relator_count() == 9);
}

TEST_CASE("registry covolume metadata for the Bass-Kulkarni tower") {
  for (long long r = 1; r <= 10; ++r) {
    ExampleParams params;
    params.r = r;
    const Example gamma = example_registry("bk_gamma", params);
    const Example lambda = example_registry("bk_lambda", params);
    CHECK(*gamma.metadata.covolume == Rational(Int(1), int_pow(Int(2), Int(r))));
    CHECK(*lambda.metadata.covolume == Rational(Int(2), int_pow(Int(2), Int(r))));
    CHECK(*gamma.metadata.valence == 4);
    // Covolume arithmetic: ratio 2^{r'-r} for r | r'.
    if (2 * r <= 10) {
      ExampleParams params2;
      params2.r = 2 * r;
      const Example gamma2 = example_registry("bk_gamma", params2);
      CHECK(*gamma.metadata.covolume / *gamma2.metadata.covolume ==
            Rational(int_pow(Int(2), Int(r))));
    }
  }
}

TEST_CASE("bk_lambda r=1 is Z2 * Z2 * Z at fingerprint level") {
  ExampleParams params;
  params.r = 1;
  const Presentation p = example_registry("bk_lambda", params).presentation;
  const AbelianInvariants inv = abelianization(p);
  CHECK(inv.free_rank == 1);
  CHECK(inv.torsion == std::vector<Int>{2, 2});
}

TEST_CASE("random finite gogs validate and enumerate indices") {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    const GraphOfGroups g = random_finite_gog(seed);
    g.validate();
    const EdgeIndexedGraph eg = edge_indices(g);
    for (long long i : eg.idx) CHECK(i >= 1);
  }
}
