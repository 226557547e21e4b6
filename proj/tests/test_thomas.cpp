#include <doctest.h>

#include <map>
#include <set>

#include "gogkit/covolume.hpp"
#include "gogkit/errors.hpp"
#include "gogkit/examples.hpp"
#include "gogkit/homcount.hpp"
#include "gogkit/thomas.hpp"
#include "gogkit/tietze.hpp"
#include "helpers.hpp"

using namespace gogkit;
using gogkit::testing::cyclic_edge_gog;
using gogkit::testing::pentagon_spec;

namespace {

std::map<std::string, std::pair<std::string, std::vector<int>>> shape_table(
    const TypedComplexOfGroups& t) {
  std::map<std::string, std::pair<std::string, std::vector<int>>> out;
  for (size_t v = 0; v < t.vtypes.size(); ++v) {
    std::string key;
    for (const auto& type : t.vtypes[v].types) {
      std::string s = "{";
      for (size_t k = 0; k < type.size(); ++k)
        s += (k ? "," : "") + t.spec.racs.I[static_cast<size_t>(type[k])];
      s += "}";
      if (!key.empty()) key += "~";
      key += s;
    }
    out[key] = {t.shapes[v].base, t.shapes[v].cyclic_types};
  }
  return out;
}

bool has_relator(const Presentation& p, const std::string& relator_text) {
  const Word w = parse_word(relator_text, p);
  const auto key = relator_key(w);
  for (const Word& r : p.relators)
    if (relator_key(r) == key) return true;
  return false;
}

}  // namespace

TEST_CASE("pentagon functor on a single edge: the 11 typed local groups") {
  // Edge of groups with Bass-Serre valences (4, 2) into the pentagon with
  // q1 = 4, q2 = 2.
  const GraphOfGroups g = cyclic_edge_gog(4, 2);
  const BuildingSpec spec = pentagon_spec(4, 2, 3, 5, 7);
  const TypedComplexOfGroups t = F2(F1(g), spec, 0, 1);

  CHECK(t.cog.sub.vertices.size() == 11);
  CHECK(t.cog.simple());
  CHECK(cocycle_check(t.cog).ok);

  const auto table = shape_table(t);
  using Row = std::pair<std::string, std::vector<int>>;
  CHECK(table.at("{}") == Row{"G_e", {}});
  CHECK(table.at("{i1}") == Row{"G_v", {}});
  CHECK(table.at("{i2}") == Row{"G_w", {}});
  CHECK(table.at("{i3}") == Row{"G_e", {2}});
  CHECK(table.at("{i4}") == Row{"G_e", {3}});
  CHECK(table.at("{i5}") == Row{"G_e", {4}});
  CHECK(table.at("{i1,i3}") == Row{"G_v", {2}});
  CHECK(table.at("{i1,i5}") == Row{"G_v", {4}});
  CHECK(table.at("{i2,i4}") == Row{"G_w", {3}});
  CHECK(table.at("{i2,i5}") == Row{"G_w", {4}});
  CHECK(table.at("{i3,i4}") == Row{"G_e", {2, 3}});

  // Local orders: direct products of the input local group with the
  // cyclic residue factors.
  for (size_t v = 0; v < t.cog.locals.size(); ++v) {
    long long expect = t.shapes[v].base == "G_v" ? 4 : (t.shapes[v].base == "G_w" ? 2 : 1);
    for (int x : t.shapes[v].cyclic_types) expect *= spec.q[static_cast<size_t>(x)];
    CHECK(t.cog.locals[v].table().order() == expect);
  }
}

TEST_CASE("pentagon functor on the LM loop merges the glued faces") {
  const GraphOfGroups g = lm_gog();
  const BuildingSpec spec = pentagon_spec(10, 10, 2, 2, 2);
  const TypedComplexOfGroups t = F2(F1(g), spec, 0, 1);
  CHECK(t.cog.sub.vertices.size() == 8);  // 11 - 3 h-identifications

  const auto table = shape_table(t);
  CHECK(table.count("{i1}~{i2}") == 1);
  CHECK(table.count("{i1,i3}~{i2,i4}") == 1);
  CHECK(table.count("{i1,i5}~{i2,i5}") == 1);
  CHECK(table.at("{i1}~{i2}").first == "G_v");
  CHECK(table.at("{i3,i4}") == std::make_pair(std::string("G_e"), std::vector<int>{2, 3}));

  // Chamber count equals the number of input edge pairs.
  long long chambers = 0;
  for (size_t v = 0; v < t.vtypes.size(); ++v)
    if (t.vtypes[v].types[0].empty()) ++chambers;
  CHECK(chambers == 1);
}

TEST_CASE("thomas on the LM loop emits the 6-generator presentation with t x3 t^-1 = x4") {
  const ThomasResult res = thomas(lm_gog(), pentagon_spec(10, 10, 2, 2, 2), 0, 1);
  const Presentation& p = res.presentation;
  CHECK(p.generator_count() == 6);
  std::set<std::string> names;
  for (const auto& gs : p.generators) names.insert(gs.token());
  CHECK(names == std::set<std::string>{"a", "b", "x3", "x4", "x5", "t"});
  CHECK(has_relator(p, "t x3 t^-1 x4^-1"));
  CHECK(has_relator(p, "t a^2 b^-1 t^-1 (a^2 b)^-1"));
  CHECK(has_relator(p, "t a b^2 t^-1 (a^-1 b^2)^-1"));
  CHECK(has_relator(p, "[t, x5]"));
  CHECK(has_relator(p, "[a, b]"));
  CHECK(has_relator(p, "x3^2"));
}

TEST_CASE("thomas output matches the explicit presentation at fingerprint level") {
  const std::vector<std::string> targets{"Z2", "Z4", "S3"};
  for (const auto& [k, l] : std::vector<std::pair<long long, long long>>{{2, 2}, {2, 3}, {3, 2}}) {
    const ThomasResult res = thomas(lm_gog(), pentagon_spec(10, 10, k, k, l), 0, 1);
    ExampleParams params;
    params.k = k;
    params.l = l;
    const Presentation expected = example_registry("lambda_kl", params).presentation;
    CHECK(fingerprint(res.presentation, targets) == fingerprint(expected, targets));
  }
}

TEST_CASE("thomas fingerprint is invariant under relabeling by a T1 witness") {
  const std::vector<std::string> targets{"Z2", "Z4", "S3"};
  const BuildingSpec spec = pentagon_spec(10, 10, 2, 2, 2);
  // The witness swaps i1<->i2 and i3<->i4; the relabeled call swaps the
  // distinguished pair.
  const Fingerprint a = fingerprint(thomas(lm_gog(), spec, 0, 1).presentation, targets);
  const Fingerprint b = fingerprint(thomas(lm_gog(), spec, 1, 0).presentation, targets);
  CHECK(a == b);
}

TEST_CASE("trivial edge into the degenerate two-generator building") {
  GraphOfGroups g;
  const int v = g.graph.add_vertex("v");
  const int w = g.graph.add_vertex("w");
  g.graph.add_edge_pair(v, w, "e");
  g.vertex_groups = {LocalGroup::trivial(), LocalGroup::trivial()};
  g.edge_groups = {LocalGroup::trivial()};
  g.edge_maps = {GraphOfGroups::EdgeMap{}, GraphOfGroups::EdgeMap{}};
  BuildingSpec spec;
  spec.racs.I = {"i1", "i2"};
  spec.q = {2, 2};
  const ThomasResult res = thomas(g, spec, 0, 1);
  CHECK(res.complex.cog.sub.vertices.size() == 3);
  CHECK(res.presentation.generator_count() == 0);
}

TEST_CASE("functor preconditions: T1 failure and valence mismatch are input errors") {
  // Asymmetric system: T1 fails.
  BuildingSpec bad;
  bad.racs.I = {"i1", "i2", "i3"};
  bad.racs.commuting = {{0, 2}};
  bad.q = {2, 2, 2};
  CHECK_THROWS_AS(F2(F1(cyclic_edge_gog(2, 2)), bad, 0, 1), input_error);

  // Valences (4,2) against q = (10, 10).
  CHECK_THROWS_AS(F2(F1(cyclic_edge_gog(4, 2)), pentagon_spec(10, 10, 2, 2, 2), 0, 1),
                  input_error);

  // Loop needs q1 = q2.
  CHECK_THROWS_AS(F2(F1(lm_gog()), pentagon_spec(10, 5, 2, 2, 2), 0, 1), input_error);
}

TEST_CASE("missing T2 extension is a hard error with an override for 2-colorable inputs") {
  // Pentagon with q3 != q4 kills T2; a bipartite input with q1 = q2 then
  // fails unless overridden.
  const GraphOfGroups g = cyclic_edge_gog(4, 4);
  const BuildingSpec spec = pentagon_spec(4, 4, 2, 3, 2);
  CHECK_THROWS_AS(F2(F1(g), spec, 0, 1), input_error);
  const TypedComplexOfGroups t = F2(F1(g), spec, 0, 1, /*override_t2=*/true);
  CHECK(t.cog.sub.vertices.size() == 11);
  // The loop genuinely needs the gluing isometry: no override applies.
  CHECK_THROWS_AS(F2(F1(bk_gamma_gog(2)), spec, 0, 1, true), input_error);
}

TEST_CASE("thomas propagates lattice metadata and sums a finite covolume") {
  GraphOfGroups g = bk_gamma_gog(2);
  LatticeAssertions lat;
  lat.ambient = "H";
  lat.vertex_data = {{Rational(1, 4), 1, false}};
  lat.edge_data = {{Rational(1, 2), 1, false}};
  lat.stable_letters = {{"e", "psi_t", true, false}};
  g.lattice = lat;

  const ThomasResult res = thomas(g, pentagon_spec(4, 4, 2, 2, 2), 0, 1);
  REQUIRE(res.complex.lattice.has_value());
  const auto& meta = *res.complex.lattice;
  CHECK(meta.ambient == "H");
  CHECK(meta.vertex_data.size() == res.complex.cog.sub.vertices.size());
  std::vector<CovolumeEntry> entries;
  for (const auto& la : meta.vertex_data) entries.push_back({la.mu, la.kernel_order});
  const CovolumeResult sum = covolume_sum(entries);
  CHECK(sum.converged);
  CHECK(sum.value > 0);
  // The subdivided-edge images inherit the stable letter; inclusions are 1.
  long long inherited = 0;
  for (const auto& s : meta.edge_psi)
    if (s == "psi_t") ++inherited;
  CHECK(inherited == 2);
}

TEST_CASE("F2 chamber development realizes the residue parameter at the glued face") {
  // Bass-Kulkarni r=2 into the pentagon with q1 = q2 = 4: the development
  // around the merged {i1}~{i2} face class sees q1 chambers.
  const TypedComplexOfGroups t = F2(F1(bk_gamma_gog(2)), pentagon_spec(4, 4, 2, 2, 2), 0, 1);
  int face_class = -1;
  for (size_t v = 0; v < t.vtypes.size(); ++v)
    if (t.vtypes[v].types[0] == std::vector<int>{0}) face_class = static_cast<int>(v);
  REQUIRE(face_class >= 0);
  const DevBall ball = develop_ball(t.cog, face_class, 1);
  CHECK(ball.developable);
  long long chambers = 0;
  for (const auto& cell : ball.cells)
    if (t.vtypes[static_cast<size_t>(cell.cls)].types[0].empty() && cell.depth == 1)
      ++chambers;
  CHECK(chambers == 4);
}
