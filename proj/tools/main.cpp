// gogkit command line: every library operation as a subcommand with
// JSON/DOT/text output. Exit codes: 0 success, 1 input error, 2 budget or
// enumeration overflow, 3 verification failure.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gogkit/coset_table.hpp"
#include "gogkit/covolume.hpp"
#include "gogkit/errors.hpp"
#include "gogkit/examples.hpp"
#include "gogkit/flag_complex.hpp"
#include "gogkit/graph_product.hpp"
#include "gogkit/json_io.hpp"
#include "gogkit/thomas.hpp"
#include "gogkit/tietze.hpp"
#include "gogkit/verify.hpp"

namespace {

using namespace gogkit;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// A presentation argument is either an inline "< ... >" text or a file
// holding the text or JSON form.
Presentation load_presentation(const std::string& arg) {
  std::string text = arg;
  if (arg.find('<') == std::string::npos) text = slurp(arg);
  size_t k = 0;
  while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  if (k < text.size() && text[k] == '{') return presentation_from_json(text);
  return parse_presentation(text);
}

std::vector<Word> load_words(const std::string& path, const Presentation& ctx) {
  std::vector<Word> out;
  std::istringstream in(slurp(path));
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    out.push_back(parse_word(line, ctx));
  }
  return out;
}

GraphOfGroups load_gog(const std::string& path) { return gog_from_json(slurp(path)); }
BuildingSpec load_spec(const std::string& path) {
  return building_spec_from_json(slurp(path));
}

std::pair<int, int> parse_edge_pair(const BuildingSpec& spec, const std::string& arg) {
  const auto comma = arg.find(',');
  if (comma == std::string::npos) throw input_error("--edge expects i1,i2");
  const int i1 = spec.racs.index_of(arg.substr(0, comma));
  const int i2 = spec.racs.index_of(arg.substr(comma + 1));
  if (i1 < 0 || i2 < 0) throw input_error("--edge names unknown generators");
  return {i1, i2};
}

nlohmann::json abelian_json(const AbelianInvariants& inv) {
  nlohmann::json j;
  j["free_rank"] = inv.free_rank;
  j["torsion"] = nlohmann::json::array();
  for (const Int& d : inv.torsion) j["torsion"].push_back(d.str());
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorial toolkit for graphs of groups, complexes of groups, "
               "and right-angled buildings"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format after the subcommand
  std::string format = "json";
  app.add_option("--format", format, "output format: json, dot or text")
      ->check(CLI::IsMember({"json", "dot", "text"}));

  // example
  auto* cmd_example = app.add_subcommand("example", "emit a registry presentation");
  std::string ex_name, ex_emit = "both";
  long long ex_n = -1, ex_r = -1, ex_k = -1, ex_l = -1;
  cmd_example->add_option("name", ex_name)->required();
  cmd_example->add_option("--n", ex_n);
  cmd_example->add_option("--r", ex_r);
  cmd_example->add_option("--k", ex_k);
  cmd_example->add_option("--l", ex_l);
  cmd_example->add_option("--emit", ex_emit)
      ->check(CLI::IsMember({"presentation", "metadata", "both"}));

  // fundamental-group
  auto* cmd_fg = app.add_subcommand("fundamental-group",
                                    "presentation of the fundamental group of a graph of groups");
  std::string fg_input;
  cmd_fg->add_option("gog", fg_input)->required();

  // abelianize
  auto* cmd_ab = app.add_subcommand("abelianize", "abelian invariants of a presentation");
  std::string ab_input;
  cmd_ab->add_option("presentation", ab_input)->required();

  // coset-enum
  auto* cmd_ce = app.add_subcommand("coset-enum", "Todd-Coxeter coset enumeration");
  std::string ce_pres, ce_subgroup, ce_witnesses;
  long long ce_max = 0;
  cmd_ce->add_option("presentation", ce_pres)->required();
  cmd_ce->add_option("--subgroup", ce_subgroup, "file with one subgroup word per line")
      ->required();
  cmd_ce->add_option("--max-cosets", ce_max);
  cmd_ce->add_option("--witnesses", ce_witnesses, "file with witness words");

  // covolume
  auto* cmd_cov = app.add_subcommand("covolume", "Serre covolume of a graph of groups");
  std::string cov_input;
  cmd_cov->add_option("gog", cov_input)->required();

  // covolume-sum
  auto* cmd_cs = app.add_subcommand("covolume-sum", "sum mu/|K| with optional tail");
  std::string cs_input;
  cmd_cs->add_option("entries", cs_input, "JSON: entries [[mu, kernel], ...], tail optional")
      ->required();

  // valences
  auto* cmd_val = app.add_subcommand("valences", "Bass-Serre tree valences");
  std::string val_input;
  cmd_val->add_option("gog", val_input)->required();

  // check-unimodular
  auto* cmd_uni = app.add_subcommand("check-unimodular", "index-ratio product on a cycle basis");
  std::string uni_input;
  cmd_uni->add_option("gog", uni_input)->required();

  // develop
  auto* cmd_dev = app.add_subcommand("develop", "tree or complex development ball");
  std::string dev_input, dev_base;
  int dev_radius = 1;
  cmd_dev->add_option("input", dev_input, "graph-of-groups or complex-of-groups JSON")
      ->required();
  cmd_dev->add_option("--base", dev_base, "base vertex / cell label");
  cmd_dev->add_option("--radius", dev_radius)->required();

  // barycentric
  auto* cmd_bary = app.add_subcommand("barycentric", "subdivision graph of a cell complex");
  std::string bary_input;
  cmd_bary->add_option("complex", bary_input)->required();

  // spherical-sets
  auto* cmd_sph = app.add_subcommand("spherical-sets", "spherical subsets of a Coxeter system");
  std::string sph_input;
  cmd_sph->add_option("spec", sph_input)->required();

  // check-t1 / check-t2
  auto* cmd_t1 = app.add_subcommand("check-t1", "symmetry condition T1 witness");
  auto* cmd_t2 = app.add_subcommand("check-t2", "symmetry condition T2 witness");
  std::string t1_input, t1_edge, t2_input, t2_edge;
  cmd_t1->add_option("spec", t1_input)->required();
  cmd_t1->add_option("--edge", t1_edge)->required();
  cmd_t2->add_option("spec", t2_input)->required();
  cmd_t2->add_option("--edge", t2_edge)->required();

  // chamber-ball
  auto* cmd_cb = app.add_subcommand("chamber-ball", "chamber graph ball with residue audit");
  std::string cb_input;
  int cb_radius = 1;
  cmd_cb->add_option("spec", cb_input)->required();
  cmd_cb->add_option("--radius", cb_radius)->required();

  // thomas
  auto* cmd_th = app.add_subcommand("thomas", "tree-to-building functor");
  std::string th_input, th_building, th_edge, th_emit = "both";
  bool th_override = false;
  cmd_th->add_option("gog", th_input)->required();
  cmd_th->add_option("--building", th_building)->required();
  cmd_th->add_option("--edge", th_edge)->required();
  cmd_th->add_option("--emit", th_emit)
      ->check(CLI::IsMember({"complex", "presentation", "both"}));
  cmd_th->add_flag("--override-t2", th_override,
                   "proceed when the T2 extension hypothesis fails (2-colorable inputs)");

  // double
  auto* cmd_db = app.add_subcommand("double", "double of a flag complex over marked vertices");
  std::string db_input, db_over;
  cmd_db->add_option("flag", db_input)->required();
  cmd_db->add_option("--over", db_over, "comma-separated vertex labels");

  // wedge
  auto* cmd_wg = app.add_subcommand("wedge", "wedge copies of a flag complex");
  std::string wg_input;
  int wg_copies = 1;
  cmd_wg->add_option("flag", wg_input)->required();
  cmd_wg->add_option("--copies", wg_copies)->required();

  // verify
  auto* cmd_vf = app.add_subcommand("verify", "run a verification suite");
  std::string vf_suite, vf_only;
  cmd_vf->add_option("suite", vf_suite)->required()->check(CLI::IsMember({"paper"}));
  cmd_vf->add_option("--only", vf_only, "criterion number or title substring");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_example) {
      ExampleParams params;
      if (ex_n >= 0) params.n = ex_n;
      if (ex_r >= 0) params.r = ex_r;
      if (ex_k >= 0) params.k = ex_k;
      if (ex_l >= 0) params.l = ex_l;
      const Example ex = example_registry(ex_name, params);
      if (format == "text") {
        if (ex_emit != "metadata") std::cout << presentation_text(ex.presentation) << "\n";
        if (ex_emit != "presentation") {
          if (ex.metadata.valence) std::cout << "valence " << *ex.metadata.valence << "\n";
          if (ex.metadata.covolume)
            std::cout << "covolume " << rational_str(*ex.metadata.covolume) << "\n";
          std::cout << "generators " << ex.metadata.generator_count << ", relators "
                    << ex.metadata.relator_count << "\n";
        }
      } else {
        nlohmann::json j;
        if (ex_emit != "metadata")
          j["presentation"] = nlohmann::json::parse(presentation_json(ex.presentation));
        if (ex_emit != "presentation") {
          nlohmann::json m;
          if (ex.metadata.valence) m["valence"] = *ex.metadata.valence;
          if (ex.metadata.covolume) m["covolume"] = rational_str(*ex.metadata.covolume);
          m["generators"] = ex.metadata.generator_count;
          m["relators"] = ex.metadata.relator_count;
          j["metadata"] = m;
        }
        std::cout << j.dump(2) << "\n";
      }
      return 0;
    }

    if (*cmd_fg) {
      const Presentation p = fundamental_group(load_gog(fg_input));
      std::cout << (format == "text" ? presentation_text(p) + "\n"
                                     : presentation_json(p) + "\n");
      return 0;
    }

    if (*cmd_ab) {
      const AbelianInvariants inv = abelianization(load_presentation(ab_input));
      if (format == "text") std::cout << inv.str() << "\n";
      else std::cout << abelian_json(inv).dump(2) << "\n";
      return 0;
    }

    if (*cmd_ce) {
      const Presentation p = load_presentation(ce_pres);
      const std::vector<Word> subgroup = load_words(ce_subgroup, p);
      const CosetTable t = todd_coxeter(p, subgroup, ce_max);
      nlohmann::json j;
      j["index"] = t.index;
      j["status"] = t.complete() ? "complete" : "overflowed";
      if (t.complete()) {
        const QuotientFingerprint fp = coset_action_image(t);
        nlohmann::json fj;
        fj["order"] = fp.order.str();
        nlohmann::json orders;
        for (const auto& [ord, cnt] : fp.element_orders)
          orders[std::to_string(ord)] = cnt;
        fj["element_orders"] = orders;
        fj["abelian_invariants"] = abelian_json(fp.abelian);
        j["fingerprint"] = fj;
        if (!ce_witnesses.empty()) {
          const WitnessReport rep =
              verify_torsion_witness(p, subgroup, load_words(ce_witnesses, p), ce_max);
          j["witnesses"] = nlohmann::json::array();
          for (const auto& e : rep.entries)
            j["witnesses"].push_back({{"word", e.word}, {"nontrivial", e.nontrivial}});
        }
      }
      std::cout << j.dump(2) << "\n";
      return t.complete() ? 0 : 2;
    }

    if (*cmd_cov) {
      std::cout << rational_str(serre_covolume(load_gog(cov_input))) << "\n";
      return 0;
    }

    if (*cmd_cs) {
      const nlohmann::json j = nlohmann::json::parse(slurp(cs_input));
      std::vector<CovolumeEntry> entries;
      for (const auto& e : j.at("entries"))
        entries.push_back({parse_rational(e.at(0).is_string()
                                              ? e.at(0).get<std::string>()
                                              : std::to_string(e.at(0).get<long long>())),
                           Int(e.at(1).get<long long>())});
      std::optional<GeometricTail> tail;
      if (j.count("tail"))
        tail = GeometricTail{parse_rational(j.at("tail").at("first").get<std::string>()),
                             parse_rational(j.at("tail").at("ratio").get<std::string>())};
      const bool truncated = j.count("truncated") && j.at("truncated").get<bool>();
      const CovolumeResult res = covolume_sum(entries, tail, truncated);
      nlohmann::json out;
      out["converged"] = res.converged;
      if (res.converged) out["value"] = rational_str(res.value);
      if (!res.detail.empty()) out["detail"] = res.detail;
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (*cmd_val) {
      const GraphOfGroups g = load_gog(val_input);
      const std::vector<long long> val = bass_serre_valences(edge_indices(g));
      nlohmann::json j;
      for (size_t v = 0; v < val.size(); ++v) j[g.graph.vertex_labels[v]] = val[v];
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*cmd_uni) {
      const GraphOfGroups g = load_gog(uni_input);
      const EdgeIndexedGraph eg = edge_indices(g);
      if (format == "dot") {
        std::cout << dot_edge_indexed(eg);
        return 0;
      }
      const UnimodularReport rep = check_unimodular(eg);
      nlohmann::json j;
      j["unimodular"] = rep.unimodular;
      if (!rep.unimodular) {
        j["ratio"] = rational_str(rep.ratio);
        j["witness"] = nlohmann::json::array();
        for (int e : rep.witness_cycle)
          j["witness"].push_back(eg.graph.edges[static_cast<size_t>(e)].label);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*cmd_dev) {
      const std::string text = slurp(dev_input);
      const std::string kind = json_kind(text);
      if (kind == "graph_of_groups") {
        const GraphOfGroups g = gog_from_json(text);
        int base = 0;
        if (!dev_base.empty()) {
          base = -1;
          for (size_t v = 0; v < g.graph.vertex_count(); ++v)
            if (g.graph.vertex_labels[v] == dev_base) base = static_cast<int>(v);
          if (base < 0) throw input_error("unknown base vertex '" + dev_base + "'");
        }
        const TreeBall ball = develop_tree_ball(g, base, dev_radius);
        std::cout << (format == "dot" ? dot_tree_ball(ball, g.graph)
                                      : tree_ball_json(ball, g.graph) + "\n");
        return 0;
      }
      if (kind == "complex_of_groups") {
        const ComplexOfGroups c = complex_of_groups_from_json(text);
        int base = 0;
        if (!dev_base.empty()) {
          base = -1;
          for (size_t v = 0; v < c.sub.vertices.size(); ++v)
            if (c.sub.vertices[v].label == dev_base) base = static_cast<int>(v);
          if (base < 0) throw input_error("unknown base cell '" + dev_base + "'");
        }
        const DevBall ball = develop_ball(c, base, dev_radius);
        std::cout << (format == "dot" ? dot_dev_ball(ball, c)
                                      : dev_ball_json(ball, c) + "\n");
        return 0;
      }
      throw input_error("develop expects a graph_of_groups or complex_of_groups document");
    }

    if (*cmd_bary) {
      const SubdivisionGraph s = barycentric(cell_complex_from_json(slurp(bary_input)));
      std::cout << (format == "dot" ? dot_subdivision(s) : subdivision_json(s) + "\n");
      return 0;
    }

    if (*cmd_sph) {
      const BuildingSpec spec = load_spec(sph_input);
      const auto sets = spherical_subsets(spec.racs);
      nlohmann::json j = nlohmann::json::array();
      for (const auto& s : sets) {
        nlohmann::json sj = nlohmann::json::array();
        for (int i : s) sj.push_back(spec.racs.I[static_cast<size_t>(i)]);
        j.push_back(sj);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*cmd_t1 || *cmd_t2) {
      const bool is_t1 = static_cast<bool>(*cmd_t1);
      const BuildingSpec spec = load_spec(is_t1 ? t1_input : t2_input);
      const auto [i1, i2] = parse_edge_pair(spec, is_t1 ? t1_edge : t2_edge);
      nlohmann::json j;
      if (is_t1) {
        const auto g = check_T1(spec, i1, i2);
        j["holds"] = g.has_value();
        if (g) {
          nlohmann::json w;
          for (size_t i = 0; i < g->size(); ++i)
            w[spec.racs.I[i]] = spec.racs.I[static_cast<size_t>((*g)[i])];
          j["witness"] = w;
        }
      } else {
        const auto h = check_T2(spec, i1, i2);
        j["holds"] = h.has_value();
        if (h) {
          nlohmann::json w;
          for (const auto& [a, b] : *h)
            w[spec.racs.I[static_cast<size_t>(a)]] = spec.racs.I[static_cast<size_t>(b)];
          j["witness"] = w;
        }
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*cmd_cb) {
      const BuildingSpec spec = load_spec(cb_input);
      const ChamberBall ball = chamber_graph_ball(spec, cb_radius);
      std::cout << (format == "dot" ? dot_chamber_ball(ball, spec)
                                    : chamber_ball_json(ball, spec) + "\n");
      return 0;
    }

    if (*cmd_th) {
      const GraphOfGroups g = load_gog(th_input);
      const BuildingSpec spec = load_spec(th_building);
      const auto [i1, i2] = parse_edge_pair(spec, th_edge);
      const ThomasResult res = thomas(g, spec, i1, i2, th_override);
      nlohmann::json j;
      if (th_emit != "presentation") {
        nlohmann::json cj;
        cj["cells"] = nlohmann::json::array();
        for (size_t v = 0; v < res.complex.vtypes.size(); ++v) {
          nlohmann::json vj;
          nlohmann::json types = nlohmann::json::array();
          for (const auto& type : res.complex.vtypes[v].types) {
            nlohmann::json tj = nlohmann::json::array();
            for (int i : type) tj.push_back(spec.racs.I[static_cast<size_t>(i)]);
            types.push_back(tj);
          }
          vj["types"] = types;
          vj["source"] = res.complex.vtypes[v].source;
          vj["base_group"] = res.complex.shapes[v].base;
          nlohmann::json factors = nlohmann::json::array();
          for (int x : res.complex.shapes[v].cyclic_types)
            factors.push_back(spec.racs.I[static_cast<size_t>(x)]);
          vj["cyclic_factors"] = factors;
          cj["cells"].push_back(vj);
        }
        cj["subdivision"] = nlohmann::json::parse(subdivision_json(res.complex.cog.sub));
        j["complex"] = cj;
      }
      if (th_emit != "complex") {
        j["presentation"] = nlohmann::json::parse(presentation_json(res.presentation));
        j["presentation_text"] = presentation_text(res.presentation);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*cmd_db) {
      const FlagComplex f = flag_from_json(slurp(db_input));
      std::vector<int> over;
      std::istringstream ss(db_over);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const int v = f.index_of(tok);
        if (v < 0) throw input_error("unknown vertex '" + tok + "'");
        over.push_back(v);
      }
      std::cout << flag_json(double_complex(f, over)) << "\n";
      return 0;
    }

    if (*cmd_wg) {
      const FlagComplex f = flag_from_json(slurp(wg_input));
      std::cout << flag_json(wedge(f, wg_copies)) << "\n";
      return 0;
    }

    if (*cmd_vf) {
      const VerificationReport report = run_verification(vf_only);
      std::cout << verification_report_json(report) << "\n";
      return report.pass() ? 0 : 3;
    }
  } catch (const budget_error& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const state_error& e) {
    std::cerr << "state error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
