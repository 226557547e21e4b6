#include "gogkit/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gogkit/coset_table.hpp"
#include "gogkit/covolume.hpp"
#include "gogkit/examples.hpp"
#include "gogkit/fixtures.hpp"
#include "gogkit/flag_complex.hpp"
#include "gogkit/graph_product.hpp"
#include "gogkit/homcount.hpp"
#include "gogkit/thomas.hpp"
#include "gogkit/tietze.hpp"

namespace gogkit {

namespace {

struct Ctx {
  CriterionResult* out = nullptr;

  void claim(const std::string& id, const std::string& anchor, const std::string& computed,
             const std::string& expected) {
    out->claims.push_back({id, anchor, computed, expected, computed == expected, false});
  }
  void claim_bool(const std::string& id, const std::string& anchor, bool ok,
                  const std::string& detail = "") {
    std::string computed = ok ? "true" : "false";
    if (!detail.empty()) computed += " (" + detail + ")";
    out->claims.push_back({id, anchor, computed, "true", ok, false});
  }
};

BuildingSpec pentagon_spec(long long q1, long long q2, long long q3, long long q4,
                           long long q5) {
  BuildingSpec spec;
  spec.racs.I = {"i1", "i2", "i3", "i4", "i5"};
  spec.racs.commuting = {{0, 2}, {2, 3}, {1, 3}, {1, 4}, {0, 4}};
  spec.q = {q1, q2, q3, q4, q5};
  return spec;
}

GraphOfGroups cyclic_edge_gog(int left, int right) {
  GraphOfGroups g;
  const int v = g.graph.add_vertex("v");
  const int w = g.graph.add_vertex("w");
  g.graph.add_edge_pair(v, w, "e");
  g.vertex_groups.push_back(LocalGroup::of(FiniteGroup::cyclic(left, "a")));
  g.vertex_groups.push_back(LocalGroup::of(FiniteGroup::cyclic(right, "b")));
  g.edge_groups.push_back(LocalGroup::trivial());
  g.edge_maps = {GraphOfGroups::EdgeMap{}, GraphOfGroups::EdgeMap{}};
  return g;
}

std::string fp_str(const Fingerprint& fp) { return fp.str(); }

void criterion_lm(Ctx& c) {
  const Example lm = example_registry("lm");
  const Presentation expected = parse_presentation(
      "< a, b, t | [a,b], t a^2 b^-1 t^-1 (a^2 b)^-1, t a b^2 t^-1 (a^-1 b^2)^-1 >");
  c.claim("1.presentation", "lm.presentation", presentation_json(lm.presentation),
          presentation_json(expected));
  c.claim("1.counts", "lm.tietze",
          std::to_string(lm.presentation.generator_count()) + "," +
              std::to_string(lm.presentation.relator_count()),
          "3,3");
  const std::vector<long long> val = bass_serre_valences(edge_indices(lm_gog()));
  c.claim("1.valence", "lm.valence", std::to_string(val.at(0)), "10");
}

void criterion_gamma_n(Ctx& c) {
  for (long long n = 2; n <= 8; ++n) {
    ExampleParams params;
    params.n = n;
    const Example ex = example_registry("gamma_n", params);
    c.claim("2.counts.n" + std::to_string(n), "gamma_n.tietze",
            std::to_string(ex.presentation.generator_count()) + "," +
                std::to_string(ex.presentation.relator_count()),
            "3," + std::to_string(n * (n - 1) / 2 + 3));
    const std::vector<long long> val = bass_serre_valences(edge_indices(gamma_n_gog(n)));
    c.claim("2.valence.n" + std::to_string(n), "gamma_n.valence",
            std::to_string(val.at(0)), std::to_string(10 * n));
  }
}

void criterion_torsion_witness(Ctx& c) {
  ExampleParams params;
  params.k = 2;
  params.l = 2;
  const Presentation p = example_registry("lambda_kl", params).presentation;
  std::vector<Word> delta;
  const std::vector<std::string> delta_texts = {
      "a",         "b",         "x3 t x4 t^-1",    "x3 x4 t^-2",
      "(x5 x3)^2", "(x5 x4)^2", "t^-1 x3 x4 t^-1", "(t x5 x4 t^-1)^2"};
  for (const std::string& text : delta_texts) delta.push_back(parse_word(text, p));
  const CosetTable t = todd_coxeter(p, delta, 10000);
  c.claim_bool("3.closes", "lambda22.delta.closes", t.complete());
  if (!t.complete()) return;
  c.claim("3.index", "lambda22.delta.index", std::to_string(t.index), "16");
  const QuotientFingerprint fp = coset_action_image(t);
  c.claim("3.order", "lambda22.quotient.order", fp.order.str(), "16");
  {
    std::ostringstream os;
    for (const auto& [ord, cnt] : fp.element_orders) os << ord << ":" << cnt << ";";
    c.claim("3.element-orders", "lambda22.quotient.element-orders", os.str(),
            "1:1;2:11;4:4;");
  }
  c.claim("3.abelian", "lambda22.quotient.abelianization", fp.abelian.str(),
          "rank 0, torsion [2,2,2]");
  const WitnessReport wr = verify_torsion_witness(
      p, delta, {parse_word("x3", p), parse_word("x4", p), parse_word("x5", p),
                 parse_word("x3 x4", p)},
      10000);
  for (const auto& e : wr.entries)
    c.claim_bool("3.witness." + e.word, "lambda22.witness.nontrivial", e.nontrivial);
}

void criterion_bk_tower(Ctx& c) {
  for (long long r = 1; r <= 10; ++r) {
    const GraphOfGroups gamma = bk_gamma_gog(r);
    const GraphOfGroups lambda = bk_lambda_gog(r);
    c.claim("4.gamma-covolume.r" + std::to_string(r), "bk.gamma.covolume",
            rational_str(serre_covolume(gamma)),
            rational_str(Rational(Int(1), int_pow(Int(2), Int(r)))));
    c.claim("4.lambda-covolume.r" + std::to_string(r), "bk.lambda.covolume",
            rational_str(serre_covolume(lambda)),
            rational_str(Rational(Int(2), int_pow(Int(2), Int(r)))));
    const std::vector<long long> val = bass_serre_valences(edge_indices(gamma));
    c.claim("4.valence.r" + std::to_string(r), "bk.valence", std::to_string(val.at(0)),
            "4");
  }
  for (long long r = 1; r <= 5; ++r)
    for (long long rp = 2 * r; rp <= 10; rp += r) {
      const Rational ratio =
          serre_covolume(bk_gamma_gog(r)) / serre_covolume(bk_gamma_gog(rp));
      c.claim("4.ratio." + std::to_string(r) + "-" + std::to_string(rp), "bk.index-ratio",
              rational_str(ratio), rational_str(Rational(int_pow(Int(2), Int(rp - r)))));
    }
}

void criterion_pentagon_functor(Ctx& c) {
  const GraphOfGroups g = cyclic_edge_gog(4, 2);
  const BuildingSpec spec = pentagon_spec(4, 2, 3, 5, 7);
  const TypedComplexOfGroups t = F2(F1(g), spec, 0, 1);
  c.claim("5.vertex-count", "pentagon.functor.cells", std::to_string(t.cog.sub.vertices.size()),
          "11");
  // The eleven typed local groups.
  std::map<std::string, std::string> table;
  for (size_t v = 0; v < t.vtypes.size(); ++v) {
    std::string key;
    for (const auto& type : t.vtypes[v].types) {
      std::string s = "{";
      for (size_t k = 0; k < type.size(); ++k)
        s += (k ? "," : "") + spec.racs.I[static_cast<size_t>(type[k])];
      s += "}";
      key += (key.empty() ? "" : "~") + s;
    }
    std::string val = t.shapes[v].base;
    for (int x : t.shapes[v].cyclic_types)
      val += " x Z" + std::to_string(spec.q[static_cast<size_t>(x)]);
    table[key] = val;
  }
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"{}", "G_e"},
      {"{i1}", "G_v"},
      {"{i2}", "G_w"},
      {"{i3}", "G_e x Z3"},
      {"{i4}", "G_e x Z5"},
      {"{i5}", "G_e x Z7"},
      {"{i1,i3}", "G_v x Z3"},
      {"{i1,i5}", "G_v x Z7"},
      {"{i2,i4}", "G_w x Z5"},
      {"{i2,i5}", "G_w x Z7"},
      {"{i3,i4}", "G_e x Z3 x Z5"},
  };
  for (const auto& [key, val] : expected)
    c.claim("5.local." + key, "pentagon.functor.local-group",
            table.count(key) ? table.at(key) : "(missing)", val);
}

void criterion_lambda_kl(Ctx& c) {
  const std::vector<std::string> targets{"Z2", "Z4", "S3"};
  for (const auto& [k, l] :
       std::vector<std::pair<long long, long long>>{{2, 2}, {2, 3}, {3, 2}}) {
    const ThomasResult res = thomas(lm_gog(), pentagon_spec(10, 10, k, k, l), 0, 1);
    ExampleParams params;
    params.k = k;
    params.l = l;
    const Presentation expected = example_registry("lambda_kl", params).presentation;
    const std::string tag = std::to_string(k) + std::to_string(l);
    c.claim("6.fingerprint." + tag, "lambda_kl.fingerprint",
            fp_str(fingerprint(res.presentation, targets)),
            fp_str(fingerprint(expected, targets)));
    if (k == 2 && l == 2) {
      bool found = false;
      const auto key = relator_key(parse_word("t x3 t^-1 x4^-1", res.presentation));
      for (const Word& r : res.presentation.relators)
        if (relator_key(r) == key) found = true;
      c.claim_bool("6.relator." + tag, "lambda_kl.t-x3-x4", found);
    }
  }
}

void criterion_f1_preserves(Ctx& c) {
  const std::vector<std::string> targets{"Z2", "Z3", "S3"};
  for (unsigned seed : {101u, 102u, 103u, 104u, 105u}) {
    const GraphOfGroups g = random_finite_gog(seed, 4);
    const Fingerprint direct = fingerprint(fundamental_group(g), targets);
    const Fingerprint via =
        fingerprint(simplify_presentation(fundamental_group_cog(F1(g).cog)), targets);
    c.claim("7.seed" + std::to_string(seed), "f1.fingerprint", fp_str(via),
            fp_str(direct));
  }
}

void criterion_development(Ctx& c) {
  // Tree balls of radius 3: interior valences match the edge-index sums.
  {
    std::vector<std::pair<std::string, GraphOfGroups>> cases;
    cases.emplace_back("bk2", bk_gamma_gog(2));
    GraphOfGroups dih;
    const int v = dih.graph.add_vertex("v");
    const int w = dih.graph.add_vertex("w");
    dih.graph.add_edge_pair(v, w, "e");
    dih.vertex_groups = {LocalGroup::of(FiniteGroup::cyclic(2, "a")),
                         LocalGroup::of(FiniteGroup::cyclic(2, "b"))};
    dih.edge_groups = {LocalGroup::trivial()};
    dih.edge_maps = {GraphOfGroups::EdgeMap{}, GraphOfGroups::EdgeMap{}};
    cases.emplace_back("dihedral", dih);
    for (const auto& [name, g] : cases) {
      const std::vector<long long> val = bass_serre_valences(edge_indices(g));
      const TreeBall ball = develop_tree_ball(g, 0, 3);
      bool ok = true;
      long long interior = 0;
      for (size_t n = 0; n < ball.nodes.size(); ++n) {
        if (!ball.nodes[n].interior) continue;
        ++interior;
        ok = ok && ball.valence(static_cast<int>(n)) ==
                       val[static_cast<size_t>(ball.nodes[n].orbit_vertex)];
      }
      c.claim_bool("8.tree." + name, "development.valence-audit", ok && interior > 0,
                   std::to_string(interior) + " interior nodes");
    }
  }
  // Chamber ball of radius 2 for the pentagon spec q = (10,10,2,2,2).
  {
    const BuildingSpec spec = pentagon_spec(10, 10, 2, 2, 2);
    const ChamberBall ball = chamber_graph_ball(spec, 2);
    bool ok = true;
    long long complete = 0;
    for (const auto& res : ball.residues) {
      if (!res.complete) continue;
      ++complete;
      ok = ok && static_cast<long long>(res.chambers.size()) ==
                     spec.q[static_cast<size_t>(res.type)];
    }
    c.claim_bool("8.chambers", "building.residue-audit", ok && complete > 0,
                 std::to_string(complete) + " complete residues in " +
                     std::to_string(ball.chambers.size()) + " chambers");
  }
}

void criterion_double_link(Ctx& c) {
  // Exhaustive: every graph K on at most 5 vertices, wedges of up to 4
  // copies, V marking the image of K's second vertex in each copy.
  long long checked = 0;
  bool all_equal = true, all_counts = true;
  for (int n = 2; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      FlagComplex k;
      for (int i = 0; i < n; ++i) k.add_vertex("u" + std::to_string(i));
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if (mask >> bit & 1) k.add_edge(i, j);
      for (int copies = 1; copies <= 4; ++copies) {
        const FlagComplex l = wedge(k, copies);
        std::vector<int> v;
        for (int cp = 0; cp < copies; ++cp) {
          const std::string want =
              copies == 1 ? k.vertices[1] : k.vertices[1] + "_" + std::to_string(cp + 1);
          v.push_back(l.index_of(want));
        }
        const FlagComplex link = salvetti_link(l, v);
        all_equal = all_equal && labeled_graph_equal(link, double_complex(l, v));
        all_counts = all_counts && link.vertices.size() == l.vertices.size() + v.size();
        ++checked;
      }
    }
  }
  c.claim_bool("9.link-equals-double", "salvetti.link-identity", all_equal,
               std::to_string(checked) + " wedges checked");
  c.claim_bool("9.vertex-count", "double.vertex-count", all_counts);
}

void criterion_unimodular_b1(Ctx& c) {
  std::vector<std::pair<std::string, GraphOfGroups>> loops;
  loops.emplace_back("lm", lm_gog());
  loops.emplace_back("gamma3", gamma_n_gog(3));
  for (long long r = 1; r <= 5; ++r)
    loops.emplace_back("bk" + std::to_string(r), bk_gamma_gog(r));
  for (const auto& [name, g] : loops)
    c.claim_bool("10.unimodular." + name, "unimodular.pass",
                 check_unimodular(edge_indices(g)).unimodular);
  {
    GraphOfGroups bad;
    const int v = bad.graph.add_vertex("v");
    bad.graph.add_edge_pair(v, v, "e");
    EdgeIndexedGraph eg;
    eg.graph = bad.graph;
    eg.idx = {1, 2};
    const UnimodularReport rep = check_unimodular(eg);
    c.claim_bool("10.unimodular.12-loop-fails", "unimodular.witness",
                 !rep.unimodular && !rep.witness_cycle.empty());
  }
  std::vector<GraphOfGroups> b1_cases = {lm_gog(), bk_gamma_gog(2), bk_lambda_gog(2),
                                         gamma_n_gog(3)};
  for (unsigned seed : {101u, 102u, 103u, 104u, 105u})
    b1_cases.push_back(random_finite_gog(seed, 4));
  bool ok = true;
  for (const auto& g : b1_cases)
    ok = ok && abelianization(fundamental_group(g)).free_rank >= g.graph.first_betti();
  c.claim_bool("10.b1", "betti.lower-bound", ok,
               std::to_string(b1_cases.size()) + " graphs");
}

}  // namespace

VerificationReport run_verification(const std::string& only) {
  const std::vector<std::pair<std::string, std::function<void(Ctx&)>>> criteria = {
      {"lm presentation and valence", criterion_lm},
      {"gamma_n Tietze counts and valences", criterion_gamma_n},
      {"lambda22 index-16 torsion-free witness", criterion_torsion_witness},
      {"Bass-Kulkarni tower covolumes", criterion_bk_tower},
      {"pentagon functor local groups", criterion_pentagon_functor},
      {"lambda_kl fingerprint cross-check", criterion_lambda_kl},
      {"F1 preserves fundamental groups", criterion_f1_preserves},
      {"development and residue audits", criterion_development},
      {"double/link identity", criterion_double_link},
      {"unimodularity and b1 bound", criterion_unimodular_b1},
  };
  VerificationReport report;
  for (size_t k = 0; k < criteria.size(); ++k) {
    const std::string number = std::to_string(k + 1);
    if (!only.empty() && criteria[k].first.find(only) == std::string::npos &&
        number != only)
      continue;
    CriterionResult res;
    res.number = static_cast<int>(k + 1);
    res.title = criteria[k].first;
    Ctx ctx{&res};
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(ctx);
    } catch (const std::exception& e) {
      res.claims.push_back({number + ".error", "criterion.error", e.what(), "(no error)",
                            false, false});
    }
    res.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    report.criteria.push_back(std::move(res));
  }
  return report;
}

std::string verification_report_json(const VerificationReport& report) {
  nlohmann::json j;
  j["status"] = report.pass() ? "pass" : "fail";
  j["criteria"] = nlohmann::json::array();
  for (const auto& cr : report.criteria) {
    nlohmann::json cj;
    cj["number"] = cr.number;
    cj["title"] = cr.title;
    cj["status"] = cr.pass() ? "pass" : "fail";
    cj["elapsed_ms"] = cr.elapsed_ms;
    cj["claims"] = nlohmann::json::array();
    for (const auto& cl : cr.claims) {
      nlohmann::json claim;
      claim["id"] = cl.id;
      claim["anchor"] = cl.anchor;
      claim["computed"] = cl.computed;
      claim["expected"] = cl.expected;
      claim["status"] = cl.unverifiable ? "unverifiable" : (cl.pass ? "pass" : "fail");
      cj["claims"].push_back(claim);
    }
    j["criteria"].push_back(cj);
  }
  return j.dump(2);
}

}  // namespace gogkit
