#include "gogkit/json_io.hpp"

#include <json.hpp>

#include "gogkit/errors.hpp"
#include "gogkit/presentation.hpp"
#include "gogkit/rational.hpp"

namespace gogkit {

namespace {

using nlohmann::json;

json local_group_json(const LocalGroup& g) {
  json j;
  if (g.finite()) {
    const FiniteGroup& t = g.table();
    if (t.order() == 1) {
      j["type"] = "trivial";
      return j;
    }
    j["type"] = "table";
    json rows = json::array();
    for (int a = 0; a < t.order(); ++a) {
      json row = json::array();
      for (int b = 0; b < t.order(); ++b) row.push_back(t.mul(a, b));
      rows.push_back(row);
    }
    j["table"] = rows;
    json gens;
    for (const auto& [name, el] : t.generators()) gens[name] = el;
    j["generators"] = gens;
    j["presentation"] = presentation_text(t.presentation());
  } else {
    j["type"] = "symbolic";
    j["presentation"] = presentation_text(g.symbolic().pres);
    if (g.symbolic().free_abelian_rank)
      j["free_abelian_rank"] = *g.symbolic().free_abelian_rank;
  }
  return j;
}

LocalGroup local_group_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "trivial") return LocalGroup::trivial();
  if (type == "cyclic")
    return LocalGroup::of(FiniteGroup::cyclic(
        j.at("order").get<int>(),
        j.count("generator") ? j.at("generator").get<std::string>() : "g"));
  if (type == "elementary_abelian_2")
    return LocalGroup::of(FiniteGroup::elementary_abelian_2(
        j.at("rank").get<int>(),
        j.count("prefix") ? j.at("prefix").get<std::string>() : "v"));
  if (type == "symmetric3") return LocalGroup::of(FiniteGroup::symmetric3());
  if (type == "dihedral4") return LocalGroup::of(FiniteGroup::dihedral4());
  if (type == "table") {
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
    std::vector<std::pair<std::string, int>> gens;
    for (const auto& [name, el] : j.at("generators").items())
      gens.emplace_back(name, el.get<int>());
    FiniteGroup g = FiniteGroup::from_table(std::move(table), std::move(gens));
    if (j.count("presentation"))
      g.declare_presentation(parse_presentation(j.at("presentation").get<std::string>()));
    return LocalGroup::of(std::move(g));
  }
  if (type == "product") {
    std::vector<LocalGroup> factors;
    for (const auto& f : j.at("factors")) factors.push_back(local_group_from_json(f));
    if (factors.empty()) return LocalGroup::trivial();
    FiniteGroup acc = factors[0].table();
    for (size_t k = 1; k < factors.size(); ++k)
      acc = FiniteGroup::direct_product(acc, factors[k].table());
    return LocalGroup::of(std::move(acc));
  }
  if (type == "symbolic") {
    SymbolicGroup s;
    s.pres = parse_presentation(j.at("presentation").get<std::string>());
    if (j.count("free_abelian_rank"))
      s.free_abelian_rank = j.at("free_abelian_rank").get<int>();
    return LocalGroup::of(std::move(s));
  }
  throw input_error("unknown local group type '" + type + "'");
}

}  // namespace

std::string gog_json(const GraphOfGroups& g) {
  json j;
  j["kind"] = "graph_of_groups";
  j["vertices"] = json::array();
  for (size_t v = 0; v < g.graph.vertex_count(); ++v) {
    json vj;
    vj["label"] = g.graph.vertex_labels[v];
    vj["group"] = local_group_json(g.vertex_groups[v]);
    j["vertices"].push_back(vj);
  }
  j["edges"] = json::array();
  for (size_t p = 0; p < g.graph.edge_pair_count(); ++p) {
    const auto& fwd = g.graph.edges[2 * p];
    json ej;
    ej["label"] = fwd.label;
    ej["iota"] = g.graph.vertex_labels[static_cast<size_t>(fwd.iota)];
    ej["tau"] = g.graph.vertex_labels[static_cast<size_t>(fwd.tau)];
    ej["group"] = local_group_json(g.edge_groups[p]);
    const Presentation pi = g.vertex_groups[static_cast<size_t>(fwd.iota)].presentation();
    const Presentation pt = g.vertex_groups[static_cast<size_t>(fwd.tau)].presentation();
    json fw = json::array(), bw = json::array();
    for (const Word& w : g.edge_maps[2 * p].images) fw.push_back(word_text(w, pi));
    for (const Word& w : g.edge_maps[2 * p + 1].images) bw.push_back(word_text(w, pt));
    ej["fwd_images"] = fw;
    ej["bwd_images"] = bw;
    if (g.edge_maps[2 * p].declared_index) ej["fwd_index"] = *g.edge_maps[2 * p].declared_index;
    if (g.edge_maps[2 * p + 1].declared_index)
      ej["bwd_index"] = *g.edge_maps[2 * p + 1].declared_index;
    j["edges"].push_back(ej);
  }
  if (g.lattice) {
    json lj;
    lj["ambient"] = g.lattice->ambient;
    lj["locals_commensurable"] = g.lattice->locals_commensurable;
    lj["vertices"] = json::array();
    for (const auto& a : g.lattice->vertex_data)
      lj["vertices"].push_back({{"mu", rational_str(a.mu)},
                                {"kernel", a.kernel_order.str()},
                                {"verified", a.verified}});
    lj["edges"] = json::array();
    for (const auto& a : g.lattice->edge_data)
      lj["edges"].push_back({{"mu", rational_str(a.mu)},
                             {"kernel", a.kernel_order.str()},
                             {"verified", a.verified}});
    lj["stable_letters"] = json::array();
    for (const auto& s : g.lattice->stable_letters)
      lj["stable_letters"].push_back({{"edge", s.edge_label},
                                      {"psi", s.psi_image},
                                      {"commensurates", s.commensurates}});
    j["lattice"] = lj;
  }
  return j.dump(2);
}

GraphOfGroups gog_from_json(const std::string& text) {
  const json j = json::parse(text);
  GraphOfGroups g;
  for (const auto& vj : j.at("vertices")) {
    g.graph.add_vertex(vj.at("label").get<std::string>());
    g.vertex_groups.push_back(local_group_from_json(vj.at("group")));
  }
  auto vertex_index = [&](const std::string& label) {
    for (size_t v = 0; v < g.graph.vertex_count(); ++v)
      if (g.graph.vertex_labels[v] == label) return static_cast<int>(v);
    throw input_error("unknown vertex label '" + label + "'");
  };
  for (const auto& ej : j.at("edges")) {
    const int iota = vertex_index(ej.at("iota").get<std::string>());
    const int tau = vertex_index(ej.at("tau").get<std::string>());
    g.graph.add_edge_pair(iota, tau, ej.at("label").get<std::string>());
    g.edge_groups.push_back(local_group_from_json(ej.at("group")));
    GraphOfGroups::EdgeMap fwd, bwd;
    const Presentation pi = g.vertex_groups[static_cast<size_t>(iota)].presentation();
    const Presentation pt = g.vertex_groups[static_cast<size_t>(tau)].presentation();
    for (const auto& w : ej.at("fwd_images"))
      fwd.images.push_back(parse_word(w.get<std::string>(), pi));
    for (const auto& w : ej.at("bwd_images"))
      bwd.images.push_back(parse_word(w.get<std::string>(), pt));
    if (ej.count("fwd_index")) fwd.declared_index = ej.at("fwd_index").get<long long>();
    if (ej.count("bwd_index")) bwd.declared_index = ej.at("bwd_index").get<long long>();
    g.edge_maps.push_back(std::move(fwd));
    g.edge_maps.push_back(std::move(bwd));
  }
  if (j.count("lattice")) {
    const auto& lj = j.at("lattice");
    LatticeAssertions lat;
    lat.ambient = lj.at("ambient").get<std::string>();
    if (lj.count("locals_commensurable"))
      lat.locals_commensurable = lj.at("locals_commensurable").get<bool>();
    for (const auto& a : lj.at("vertices"))
      lat.vertex_data.push_back({parse_rational(a.at("mu").get<std::string>()),
                                 Int(a.at("kernel").get<std::string>()), false});
    for (const auto& a : lj.at("edges"))
      lat.edge_data.push_back({parse_rational(a.at("mu").get<std::string>()),
                               Int(a.at("kernel").get<std::string>()), false});
    if (lj.count("stable_letters"))
      for (const auto& s : lj.at("stable_letters"))
        lat.stable_letters.push_back({s.at("edge").get<std::string>(),
                                      s.at("psi").get<std::string>(),
                                      s.count("commensurates")
                                          ? s.at("commensurates").get<bool>()
                                          : true,
                                      false});
    g.lattice = std::move(lat);
  }
  g.validate();
  return g;
}

std::string cell_complex_json(const CellComplex& c) {
  json j;
  j["kind"] = "cell_complex";
  j["cells"] = json::array();
  for (const auto& cell : c.cells) {
    json cj;
    cj["label"] = cell.label;
    cj["dim"] = cell.dim;
    json facets = json::array();
    for (int f : cell.facets) facets.push_back(c.cells[static_cast<size_t>(f)].label);
    cj["facets"] = facets;
    j["cells"].push_back(cj);
  }
  return j.dump(2);
}

CellComplex cell_complex_from_json(const std::string& text) {
  const json j = json::parse(text);
  CellComplex c;
  std::map<std::string, int> ids;
  for (const auto& cj : j.at("cells")) {
    const std::string label = cj.at("label").get<std::string>();
    if (ids.count(label)) throw input_error("duplicate cell label '" + label + "'");
    ids[label] = c.add_cell(cj.at("dim").get<int>(), label);
  }
  size_t k = 0;
  for (const auto& cj : j.at("cells")) {
    for (const auto& f : cj.at("facets")) {
      const auto it = ids.find(f.get<std::string>());
      if (it == ids.end()) throw input_error("unknown facet label");
      c.cells[k].facets.push_back(it->second);
    }
    ++k;
  }
  c.validate();
  return c;
}

std::string complex_of_groups_json(const ComplexOfGroups& c) {
  json j;
  j["kind"] = "complex_of_groups";
  j["subdivision"] = json::parse(subdivision_json(c.sub));
  j["local_groups"] = json::array();
  for (const auto& lg : c.locals) j["local_groups"].push_back(local_group_json(lg));
  j["structure_maps"] = json::array();
  for (size_t e = 0; e < c.sub.edges.size(); ++e) {
    const Presentation pt =
        c.locals[static_cast<size_t>(c.sub.edges[e].to)].presentation();
    json images = json::array();
    for (const Word& w : c.psi[e]) images.push_back(word_text(w, pt));
    j["structure_maps"].push_back(images);
  }
  json twists = json::array();
  for (int t : c.twists) twists.push_back(t);
  j["twists"] = twists;
  return j.dump(2);
}

ComplexOfGroups complex_of_groups_from_json(const std::string& text) {
  const json j = json::parse(text);
  ComplexOfGroups cog;
  // Input complexes are given over a cell complex; structure maps are
  // listed per covering pair and composites are composed automatically.
  const CellComplex cells = cell_complex_from_json(j.at("complex").dump());
  cog.sub = barycentric(cells);
  std::map<std::string, int> cls;
  for (size_t v = 0; v < cog.sub.vertices.size(); ++v)
    cls[cog.sub.vertices[v].label] = static_cast<int>(v);
  cog.locals.assign(cog.sub.vertices.size(), LocalGroup::trivial());
  for (const auto& [label, gj] : j.at("local_groups").items()) {
    const auto it = cls.find(label);
    if (it == cls.end()) throw input_error("local group for unknown cell '" + label + "'");
    cog.locals[static_cast<size_t>(it->second)] = local_group_from_json(gj);
  }
  // Covering maps from the input.
  std::map<std::pair<int, int>, std::vector<Word>> given;
  if (j.count("structure_maps"))
    for (const auto& mj : j.at("structure_maps")) {
      const int from = cls.at(mj.at("from").get<std::string>());
      const int to = cls.at(mj.at("to").get<std::string>());
      std::vector<Word> images;
      const Presentation pt = cog.locals[static_cast<size_t>(to)].presentation();
      for (const auto& w : mj.at("images"))
        images.push_back(parse_word(w.get<std::string>(), pt));
      given[{from, to}] = std::move(images);
    }
  // Resolve each subdivision edge: direct entry, identity for trivial
  // sources, or the composite of covering maps.
  cog.psi.assign(cog.sub.edges.size(), {});
  std::function<std::vector<Word>(int, int)> resolve = [&](int from,
                                                           int to) -> std::vector<Word> {
    const auto it = given.find({from, to});
    if (it != given.end()) return it->second;
    const size_t ngens =
        cog.locals[static_cast<size_t>(from)].presentation().generator_count();
    if (ngens == 0) return {};
    // Compose through any intermediate cell.
    for (size_t mid = 0; mid < cog.sub.vertices.size(); ++mid) {
      const auto f1 = given.find({from, static_cast<int>(mid)});
      if (f1 == given.end()) continue;
      const auto f2 = given.find({static_cast<int>(mid), to});
      if (f2 == given.end()) continue;
      std::vector<Word> out;
      for (const Word& w : f1->second) out.push_back(substitute(w, f2->second));
      return out;
    }
    throw input_error("no structure map from '" +
                      cog.sub.vertices[static_cast<size_t>(from)].label + "' to '" +
                      cog.sub.vertices[static_cast<size_t>(to)].label + "'");
  };
  for (size_t e = 0; e < cog.sub.edges.size(); ++e)
    cog.psi[e] = resolve(cog.sub.edges[e].from, cog.sub.edges[e].to);
  cog.twists.assign(cog.sub.composables.size(), -1);
  if (j.count("twists"))
    for (const auto& tj : j.at("twists")) {
      const int a = cls.at(tj.at("upper").get<std::string>());
      const int mid = cls.at(tj.at("mid").get<std::string>());
      const int low = cls.at(tj.at("lower").get<std::string>());
      bool found = false;
      for (size_t k = 0; k < cog.sub.composables.size(); ++k) {
        const auto& comp = cog.sub.composables[k];
        if (cog.sub.edges[static_cast<size_t>(comp.b)].from == a &&
            cog.sub.edges[static_cast<size_t>(comp.b)].to == mid &&
            cog.sub.edges[static_cast<size_t>(comp.a)].to == low) {
          cog.twists[k] = tj.at("element").get<int>();
          found = true;
        }
      }
      if (!found) throw input_error("twist names a non-composable triple");
    }
  cog.validate();
  return cog;
}

std::string building_spec_json(const BuildingSpec& spec) {
  json j;
  j["kind"] = "building_spec";
  j["I"] = spec.racs.I;
  j["commuting_pairs"] = json::array();
  for (const auto& [a, b] : spec.racs.commuting)
    j["commuting_pairs"].push_back(
        {spec.racs.I[static_cast<size_t>(a)], spec.racs.I[static_cast<size_t>(b)]});
  json q;
  for (size_t i = 0; i < spec.racs.I.size(); ++i) q[spec.racs.I[i]] = spec.q[i];
  j["q"] = q;
  return j.dump(2);
}

BuildingSpec building_spec_from_json(const std::string& text) {
  const json j = json::parse(text);
  BuildingSpec spec;
  for (const auto& name : j.at("I")) spec.racs.I.push_back(name.get<std::string>());
  for (const auto& pj : j.at("commuting_pairs")) {
    int a = spec.racs.index_of(pj.at(0).get<std::string>());
    int b = spec.racs.index_of(pj.at(1).get<std::string>());
    if (a < 0 || b < 0) throw input_error("commuting pair over unknown generator");
    if (a > b) std::swap(a, b);
    spec.racs.commuting.insert({a, b});
  }
  spec.q.assign(spec.racs.I.size(), 2);
  for (const auto& [name, qv] : j.at("q").items()) {
    const int i = spec.racs.index_of(name);
    if (i < 0) throw input_error("parameter for unknown generator '" + name + "'");
    spec.q[static_cast<size_t>(i)] = qv.get<long long>();
  }
  spec.validate();
  return spec;
}

std::string tree_ball_json(const TreeBall& ball, const SerreGraph& graph) {
  json j;
  j["kind"] = "tree_ball";
  j["radius"] = ball.radius;
  j["nodes"] = json::array();
  for (size_t n = 0; n < ball.nodes.size(); ++n) {
    const auto& node = ball.nodes[n];
    json nj;
    nj["label"] = node.label;
    nj["orbit"] = graph.vertex_labels[static_cast<size_t>(node.orbit_vertex)];
    nj["depth"] = node.depth;
    nj["parent"] = node.parent;
    nj["interior"] = node.interior;
    nj["valence"] = ball.valence(static_cast<int>(n));
    j["nodes"].push_back(nj);
  }
  return j.dump(2);
}

std::string dev_ball_json(const DevBall& ball, const ComplexOfGroups& c) {
  json j;
  j["kind"] = "development_ball";
  j["radius"] = ball.radius;
  j["developable"] = ball.developable;
  if (!ball.developable) j["witness"] = ball.witness;
  j["cells"] = json::array();
  for (const auto& cell : ball.cells)
    j["cells"].push_back({{"class", c.sub.vertices[static_cast<size_t>(cell.cls)].label},
                          {"depth", cell.depth},
                          {"label", cell.label}});
  j["incidences"] = json::array();
  for (const auto& inc : ball.incidences)
    j["incidences"].push_back(
        {{"upper", inc.upper}, {"lower", inc.lower}, {"coset", inc.coset}});
  return j.dump(2);
}

std::string chamber_ball_json(const ChamberBall& ball, const BuildingSpec& spec) {
  json j;
  j["kind"] = "chamber_ball";
  j["radius"] = ball.radius;
  j["chambers"] = ball.labels;
  j["adjacencies"] = json::array();
  for (const auto& a : ball.adjacencies)
    j["adjacencies"].push_back({{"from", a.from},
                                {"to", a.to},
                                {"type", spec.racs.I[static_cast<size_t>(a.type)]}});
  j["residues"] = json::array();
  for (const auto& r : ball.residues)
    j["residues"].push_back({{"type", spec.racs.I[static_cast<size_t>(r.type)]},
                             {"chambers", r.chambers},
                             {"complete", r.complete}});
  return j.dump(2);
}

std::string subdivision_json(const SubdivisionGraph& s) {
  json j;
  j["kind"] = "subdivision";
  j["vertices"] = json::array();
  for (const auto& v : s.vertices)
    j["vertices"].push_back({{"label", v.label}, {"dim", v.dim}});
  j["edges"] = json::array();
  for (const auto& e : s.edges) j["edges"].push_back({e.from, e.to});
  j["composables"] = json::array();
  for (const auto& comp : s.composables)
    j["composables"].push_back({comp.a, comp.b, comp.ab});
  return j.dump(2);
}

std::string json_kind(const std::string& text) {
  const json j = json::parse(text);
  if (j.contains("kind")) return j.at("kind").get<std::string>();
  if (j.contains("generators") && j.contains("relators")) return "presentation";
  return "";
}

}  // namespace gogkit
