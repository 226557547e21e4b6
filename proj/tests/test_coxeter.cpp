#include <doctest.h>

#include <algorithm>
#include <random>

#include "gogkit/cell_complex.hpp"
#include "gogkit/coxeter.hpp"
#include "gogkit/errors.hpp"
#include "gogkit/graph_product.hpp"
#include "helpers.hpp"

using namespace gogkit;
using gogkit::testing::pentagon_racs;
using gogkit::testing::pentagon_spec;

namespace {

// Exhaustive oracle: subsets of I that are cliques of the commutation
// graph.
long long clique_count_oracle(const RightAngledCoxeterSystem& r) {
  const int n = static_cast<int>(r.I.size());
  long long count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1)) ok = r.commute(i, j);
    if (ok) ++count;
  }
  return count;
}

RightAngledCoxeterSystem random_racs(unsigned seed, int n) {
  std::mt19937 rng(seed);
  RightAngledCoxeterSystem r;
  for (int i = 0; i < n; ++i) r.I.push_back("i" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2) r.commuting.insert({i, j});
  return r;
}

}  // namespace

TEST_CASE("spherical subsets of the pentagon system") {
  const auto s = spherical_subsets(pentagon_racs());
  CHECK(s.size() == 11);  // 1 + 5 + 5
  CHECK(clique_count_oracle(pentagon_racs()) == 11);
}

TEST_CASE("spherical subsets: free and abelian extremes") {
  RightAngledCoxeterSystem free4;
  free4.I = {"a", "b", "c", "d"};
  CHECK(spherical_subsets(free4).size() == 5);  // n + 1

  RightAngledCoxeterSystem ab3;
  ab3.I = {"a", "b", "c"};
  ab3.commuting = {{0, 1}, {0, 2}, {1, 2}};
  CHECK(spherical_subsets(ab3).size() == 8);  // 2^n
}

TEST_CASE("spherical subset count equals the clique count for random systems") {
  for (unsigned seed = 1; seed <= 12; ++seed) {
    const auto r = random_racs(seed, 3 + static_cast<int>(seed % 5));
    CHECK(static_cast<long long>(spherical_subsets(r).size()) == clique_count_oracle(r));
  }
}

TEST_CASE("chamber of the pentagon has 11 typed vertices, matching the solid pentagon") {
  const Chamber c = chamber(pentagon_racs());
  CHECK(c.types.size() == 11);
  CHECK(c.types.size() == barycentric(solid_polygon(5)).vertices.size());
}

TEST_CASE("nerve of the pentagon system is the 5-cycle") {
  const FlagComplex n = nerve(pentagon_racs());
  CHECK(n.vertices.size() == 5);
  CHECK(n.edges.size() == 5);
  CHECK(n.adjacent(0, 2));
  CHECK_FALSE(n.adjacent(0, 1));
}

TEST_CASE("chamber of a single generator is one edge") {
  RightAngledCoxeterSystem r;
  r.I = {"i1"};
  const Chamber c = chamber(r);
  CHECK(c.types.size() == 2);  // {} and {i1}
  CHECK(c.face_pairs.size() == 1);
}

TEST_CASE("chamber of two commuting generators is the subdivided square quadrant") {
  RightAngledCoxeterSystem r;
  r.I = {"i1", "i2"};
  r.commuting = {{0, 1}};
  const Chamber c = chamber(r);
  CHECK(c.types.size() == 4);  // {}, {1}, {2}, {1,2}
}

TEST_CASE("T1 on the pentagon finds the reflection swapping the ends") {
  const BuildingSpec spec = pentagon_spec(10, 10, 2, 2, 2);
  const auto g = check_T1(spec, 0, 1);
  REQUIRE(g.has_value());
  // The reflection i1<->i2, i3<->i4, i5 fixed.
  CHECK(*g == std::vector<int>{1, 0, 3, 2, 4});
  // Oracle: exhaustive scan over all 120 bijections; the witness is the
  // lexicographically least valid one.
  std::vector<int> perm{0, 1, 2, 3, 4};
  std::vector<std::vector<int>> valid;
  std::sort(perm.begin(), perm.end());
  do {
    if (perm[0] != 1) continue;
    bool ok = true;
    for (int i = 0; i < 5 && ok; ++i)
      for (int j = 0; j < 5 && ok; ++j)
        ok = spec.racs.m(i, j) ==
             spec.racs.m(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    if (ok) valid.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  REQUIRE_FALSE(valid.empty());
  CHECK(*g == *std::min_element(valid.begin(), valid.end()));
}

TEST_CASE("T1 for two generators with infinite order product is the transposition") {
  BuildingSpec spec;
  spec.racs.I = {"i1", "i2"};
  spec.q = {3, 3};
  const auto g = check_T1(spec, 0, 1);
  REQUIRE(g.has_value());
  CHECK(*g == std::vector<int>{1, 0});
}

TEST_CASE("T1 fails on an asymmetric system") {
  // Path i1-i3 plus isolated i2: no automorphism swaps i1 and i2.
  BuildingSpec spec;
  spec.racs.I = {"i1", "i2", "i3"};
  spec.racs.commuting = {{0, 2}};
  spec.q = {2, 2, 2};
  CHECK_FALSE(check_T1(spec, 0, 1).has_value());
}

TEST_CASE("T1 demands an infinite-order pair") {
  BuildingSpec spec;
  spec.racs.I = {"i1", "i2"};
  spec.racs.commuting = {{0, 1}};
  spec.q = {2, 2};
  CHECK_THROWS_AS(check_T1(spec, 0, 1), input_error);
}

TEST_CASE("T2 on the pentagon needs matching side parameters") {
  const auto h_match = check_T2(pentagon_spec(10, 10, 2, 2, 3), 0, 1);
  REQUIRE(h_match.has_value());
  const std::map<int, int> expected{{0, 1}, {2, 3}, {4, 4}};
  CHECK(*h_match == expected);

  CHECK_FALSE(check_T2(pentagon_spec(10, 10, 2, 3, 2), 0, 1).has_value());
}

TEST_CASE("T2 with an all-infinite row reduces to the parameter equation") {
  BuildingSpec spec;
  spec.racs.I = {"i1", "i2", "i3"};
  spec.q = {2, 2, 5};
  const auto h = check_T2(spec, 0, 1);
  REQUIRE(h.has_value());
  CHECK(h->size() == 1);
  CHECK(h->at(0) == 1);

  spec.q = {2, 3, 5};
  CHECK_FALSE(check_T2(spec, 0, 1).has_value());
}

TEST_CASE("T1 success implies T2 when q is constant on the witness orbits") {
  for (unsigned seed = 30; seed < 60; ++seed) {
    const auto r = random_racs(seed, 4 + static_cast<int>(seed % 3));
    BuildingSpec spec;
    spec.racs = r;
    spec.q.assign(r.I.size(), 3);  // constant parameters
    for (size_t i1 = 0; i1 < r.I.size(); ++i1)
      for (size_t i2 = 0; i2 < r.I.size(); ++i2) {
        if (i1 == i2 || r.m(static_cast<int>(i1), static_cast<int>(i2)) != 0) continue;
        if (check_T1(spec, static_cast<int>(i1), static_cast<int>(i2)))
          CHECK(check_T2(spec, static_cast<int>(i1), static_cast<int>(i2)).has_value());
      }
  }
}

TEST_CASE("T1/T2 witnesses verify their defining equations") {
  const BuildingSpec spec = pentagon_spec(10, 10, 4, 4, 3);
  const auto g = check_T1(spec, 0, 1);
  REQUIRE(g.has_value());
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(spec.racs.m(i, j) ==
            spec.racs.m((*g)[static_cast<size_t>(i)], (*g)[static_cast<size_t>(j)]));
  const auto h = check_T2(spec, 0, 1);
  REQUIRE(h.has_value());
  for (const auto& [a, b] : *h) CHECK(spec.q[static_cast<size_t>(a)] == spec.q[static_cast<size_t>(b)]);
  for (const auto& [a, b] : *h)
    for (const auto& [c, d] : *h) CHECK(spec.racs.m(a, c) == spec.racs.m(b, d));
}

TEST_CASE("graph product normal form: canonical under commuting shuffles and torsion") {
  const BuildingSpec spec = pentagon_spec(3, 4, 2, 5, 2);
  std::mt19937 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    GPWord raw;
    const int len = static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i) {
      const int g = static_cast<int>(rng() % 5);
      raw.push_back(Syllable{g, 1 + static_cast<long long>(rng()) %
                                    (spec.q[static_cast<size_t>(g)] - 1)});
    }
    const GPWord nf = gp_normal_form(spec, raw);
    // Adjacent commuting swaps leave the normal form unchanged.
    GPWord shuffled = raw;
    for (int s = 0; s < 10 && shuffled.size() >= 2; ++s) {
      const size_t p = rng() % (shuffled.size() - 1);
      if (spec.racs.commute(shuffled[p].gen, shuffled[p + 1].gen))
        std::swap(shuffled[p], shuffled[p + 1]);
    }
    CHECK(gp_normal_form(spec, shuffled) == nf);
    // Appending q_i copies of a syllable is the identity.
    if (!raw.empty()) {
      GPWord padded = raw;
      const int g = static_cast<int>(rng() % 5);
      for (long long k = 0; k < spec.q[static_cast<size_t>(g)]; ++k)
        padded.push_back(Syllable{g, 1});
      CHECK(gp_normal_form(spec, padded) == nf);
    }
  }
}

TEST_CASE("chamber ball: single generator") {
  BuildingSpec spec;
  spec.racs.I = {"i1"};
  spec.q = {2};
  const ChamberBall ball = chamber_graph_ball(spec, 1);
  CHECK(ball.chambers.size() == 2);
}

TEST_CASE("chamber ball: two commuting generators form the complete grid") {
  BuildingSpec spec;
  spec.racs.I = {"i1", "i2"};
  spec.racs.commuting = {{0, 1}};
  spec.q = {2, 3};
  const ChamberBall ball = chamber_graph_ball(spec, 2);
  CHECK(ball.chambers.size() == 6);  // Z2 x Z3
  for (const auto& res : ball.residues) {
    CHECK(res.complete);
    CHECK(static_cast<long long>(res.chambers.size()) == spec.q[static_cast<size_t>(res.type)]);
  }
}

TEST_CASE("chamber ball: pentagon residues audit and sphere count") {
  const BuildingSpec spec = pentagon_spec(10, 10, 2, 2, 2);
  const ChamberBall ball = chamber_graph_ball(spec, 2);
  long long at_distance_1 = 0;
  for (size_t n = 0; n < ball.chambers.size(); ++n)
    if (ball.chambers[n].size() == 1) ++at_distance_1;
  long long expected = 0;
  for (long long q : spec.q) expected += q - 1;
  CHECK(at_distance_1 == expected);
  for (const auto& res : ball.residues) {
    CHECK(static_cast<long long>(res.chambers.size()) <= spec.q[static_cast<size_t>(res.type)]);
    if (res.complete)
      CHECK(static_cast<long long>(res.chambers.size()) ==
            spec.q[static_cast<size_t>(res.type)]);
  }
  // Complete residues exist in the interior.
  long long complete = 0;
  for (const auto& res : ball.residues)
    if (res.complete) ++complete;
  CHECK(complete > 0);
}
