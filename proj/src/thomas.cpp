#include "gogkit/thomas.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "gogkit/errors.hpp"
#include "gogkit/tietze.hpp"

namespace gogkit {

F1Image F1(const GraphOfGroups& g) {
  g.validate();
  F1Image out;
  out.source = g;
  for (size_t v = 0; v < g.graph.vertex_count(); ++v) {
    out.vertex_class.push_back(static_cast<int>(out.cog.sub.vertices.size()));
    out.cog.sub.vertices.push_back({g.graph.vertex_labels[v], 0});
    out.cog.locals.push_back(g.vertex_groups[v]);
  }
  for (size_t p = 0; p < g.graph.edge_pair_count(); ++p) {
    out.midpoint_class.push_back(static_cast<int>(out.cog.sub.vertices.size()));
    out.cog.sub.vertices.push_back({g.graph.edges[2 * p].label, 1});
    out.cog.locals.push_back(g.edge_groups[p]);
  }
  out.half_edge.resize(g.graph.edges.size());
  for (size_t e = 0; e < g.graph.edges.size(); ++e) {
    out.half_edge[e] = static_cast<int>(out.cog.sub.edges.size());
    out.cog.sub.edges.push_back(
        {out.midpoint_class[static_cast<size_t>(g.graph.pair_of(static_cast<int>(e)))],
         out.vertex_class[static_cast<size_t>(g.graph.edges[e].iota)]});
    out.cog.psi.push_back(g.edge_maps[e].images);
  }
  out.cog.validate();
  return out;
}

namespace {

bool contains(const std::vector<int>& sorted_set, int x) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), x);
}

std::vector<int> apply_h(const std::map<int, int>& h, const std::vector<int>& j) {
  std::vector<int> out;
  for (int x : j) {
    const auto it = h.find(x);
    if (it == h.end()) throw state_error("h undefined on a spherical set member");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string type_str(const RightAngledCoxeterSystem& r, const std::vector<int>& j) {
  std::ostringstream os;
  os << "{";
  for (size_t k = 0; k < j.size(); ++k)
    os << (k ? "," : "") << r.I[static_cast<size_t>(j[k])];
  os << "}";
  return os.str();
}

// A local group of the image complex: an input local group extended by
// cyclic factors for the given types. Tracks the generator layout.
struct LocalProduct {
  LocalGroup group;
  std::vector<int> base_ids;         // generator ids of the base group
  std::map<int, int> factor_ids;     // type index -> generator id
};

LocalProduct make_product(const LocalGroup& base, const std::vector<int>& factor_types,
                          const BuildingSpec& spec) {
  LocalProduct out;
  const Presentation bp = base.presentation();
  std::set<std::string> taken;
  for (const auto& gs : bp.generators) taken.insert(gs.token());
  auto factor_name = [&](int type) {
    std::string want = "x" + std::to_string(type + 1);
    while (taken.count(want)) want += "c";
    taken.insert(want);
    return want;
  };
  if (base.finite()) {
    FiniteGroup acc = base.table();
    for (int t : factor_types)
      acc = FiniteGroup::direct_product(
          acc, FiniteGroup::cyclic(static_cast<int>(spec.q[static_cast<size_t>(t)]),
                                   factor_name(t)));
    out.group = LocalGroup::of(std::move(acc));
  } else {
    SymbolicGroup s = base.symbolic();
    s.free_abelian_rank.reset();
    for (int t : factor_types) {
      const int x = s.pres.add_generator(GeneratorSymbol::parse(factor_name(t)));
      s.pres.add_relator(power(Word{{Letter{x, +1}}},
                               static_cast<long long>(spec.q[static_cast<size_t>(t)])));
      for (int other = 0; other < x; ++other)
        s.pres.add_relator(commutator(Word{{Letter{other, +1}}}, Word{{Letter{x, +1}}}));
    }
    out.group = LocalGroup::of(std::move(s));
  }
  const size_t nb = bp.generator_count();
  for (size_t i = 0; i < nb; ++i) out.base_ids.push_back(static_cast<int>(i));
  for (size_t k = 0; k < factor_types.size(); ++k)
    out.factor_ids[factor_types[k]] = static_cast<int>(nb + k);
  return out;
}

}  // namespace

TypedComplexOfGroups F2(const F1Image& f1, const BuildingSpec& spec, int i1, int i2,
                        bool override_t2) {
  spec.validate();
  const GraphOfGroups& g = f1.source;
  const int nI = static_cast<int>(spec.racs.I.size());
  if (i1 < 0 || i2 < 0 || i1 >= nI || i2 >= nI || i1 == i2)
    throw input_error("functor needs two distinct generators of I");
  if (spec.racs.m(i1, i2) != 0)
    throw input_error("functor requires m(i1,i2) = infinity");
  if (!check_T1(spec, i1, i2))
    throw input_error("functor inapplicable: condition T1 fails for the chosen pair");

  const EdgeIndexedGraph eg = edge_indices(g);
  bool identity_like = true;
  for (long long i : eg.idx) identity_like = identity_like && i == 1;
  const std::vector<long long> val = bass_serre_valences(eg);
  const long long q1 = spec.q[static_cast<size_t>(i1)];
  const long long q2 = spec.q[static_cast<size_t>(i2)];

  // 2-colorability of the underlying graph.
  const size_t nv = g.graph.vertex_count();
  std::vector<int> color(nv, -1);
  bool bipartite = true;
  {
    std::deque<int> queue{0};
    color[0] = 0;
    while (!queue.empty() && bipartite) {
      const int v = queue.front();
      queue.pop_front();
      for (const auto& e : g.graph.edges) {
        if (e.iota != v) continue;
        if (e.tau == v) bipartite = false;  // loop
        if (color[static_cast<size_t>(e.tau)] < 0) {
          color[static_cast<size_t>(e.tau)] = 1 - color[static_cast<size_t>(v)];
          queue.push_back(e.tau);
        } else if (color[static_cast<size_t>(e.tau)] == color[static_cast<size_t>(v)]) {
          bipartite = false;
        }
      }
    }
  }

  // Per edge pair, the orientation attached to the i1-side.
  std::vector<int> i1_side(g.graph.edge_pair_count(), -1);
  // Per vertex: does it own an i1-end / i2-end?
  std::vector<char> has_i1(nv, 0), has_i2(nv, 0);

  if (bipartite) {
    // Colors map to types; valences pick the map when q1 != q2.
    int color_of_i1;
    if (q1 != q2) {
      color_of_i1 = -1;
      for (size_t v = 0; v < nv && !identity_like; ++v) {
        const int want = val[v] == q1 ? 0 : (val[v] == q2 ? 1 : -2);
        if (want == -2)
          throw input_error("valence " + std::to_string(val[v]) + " at vertex " +
                            g.graph.vertex_labels[v] + " matches neither q_i1 nor q_i2");
        const int c = color[v];
        const int assign = want == 0 ? c : 1 - c;
        if (color_of_i1 < 0) color_of_i1 = assign;
        if (color_of_i1 != assign)
          throw input_error("valences are inconsistent with a 2-coloring");
      }
      if (color_of_i1 < 0) color_of_i1 = 0;
    } else {
      for (size_t v = 0; v < nv && !identity_like; ++v)
        if (val[v] != q1)
          throw input_error("valence " + std::to_string(val[v]) + " at vertex " +
                            g.graph.vertex_labels[v] + " does not match q_i1 = q_i2");
      color_of_i1 = color[static_cast<size_t>(g.graph.least_labeled_vertex())];
    }
    for (size_t p = 0; p < g.graph.edge_pair_count(); ++p) {
      const int fwd = static_cast<int>(2 * p);
      const int vi = g.graph.edges[static_cast<size_t>(fwd)].iota;
      i1_side[p] = color[static_cast<size_t>(vi)] == color_of_i1
                       ? fwd
                       : g.graph.mate(fwd);
    }
  } else {
    if (q1 != q2 && !identity_like)
      throw input_error(
          "a non-2-colorable graph forces q_i1 = q_i2; the parameters differ");
    for (size_t v = 0; v < nv && !identity_like; ++v)
      if (val[v] != q1)
        throw input_error("valence " + std::to_string(val[v]) + " at vertex " +
                          g.graph.vertex_labels[v] + " does not match q_i1 = q_i2");
    for (size_t p = 0; p < g.graph.edge_pair_count(); ++p) {
      const int fwd = static_cast<int>(2 * p);
      const auto& e = g.graph.edges[static_cast<size_t>(fwd)];
      if (e.iota == e.tau) {
        i1_side[p] = fwd;  // loop: forward orientation carries the i1-vertex
      } else {
        // Lesser endpoint label takes the i1-vertex.
        const std::string& li = g.graph.vertex_labels[static_cast<size_t>(e.iota)];
        const std::string& lt = g.graph.vertex_labels[static_cast<size_t>(e.tau)];
        i1_side[p] = (li < lt || (li == lt && e.iota < e.tau)) ? fwd : g.graph.mate(fwd);
      }
    }
  }
  for (size_t p = 0; p < g.graph.edge_pair_count(); ++p) {
    has_i1[static_cast<size_t>(g.graph.edges[static_cast<size_t>(i1_side[p])].iota)] = 1;
    has_i2[static_cast<size_t>(
        g.graph.edges[static_cast<size_t>(g.graph.mate(i1_side[p]))].iota)] = 1;
  }

  // T2 with a T1 witness extending it, when the hypothesis requires it.
  std::map<int, int> h;
  bool have_h = false;
  if (!bipartite || q1 == q2) {
    const auto gw = t1_witness_extending_t2(spec, i1, i2);
    if (gw) {
      for (int i = 0; i < nI; ++i)
        if (spec.racs.m(i1, i) != 0) h[i] = (*gw)[static_cast<size_t>(i)];
      have_h = true;
    } else {
      if (!bipartite)
        throw input_error(
            "functor inapplicable: condition T2 fails with no T1 witness extending it "
            "(required to glue a chamber quotient)");
      if (!override_t2)
        throw input_error(
            "functor inapplicable: condition T2 fails with no T1 witness extending it");
    }
  }
  std::map<std::vector<int>, std::vector<int>> h_type, h_inv;
  std::map<int, int> h_elem_inv;
  const std::vector<std::vector<int>> S = spherical_subsets(spec.racs);
  if (have_h) {
    for (const auto& [a, b] : h) h_elem_inv[b] = a;
    for (const auto& J : S) {
      if (!contains(J, i1)) continue;
      const std::vector<int> img = apply_h(h, J);
      h_type[J] = img;
      h_inv[img] = J;
    }
  }

  TypedComplexOfGroups out;
  out.spec = spec;
  out.i1 = i1;
  out.i2 = i2;

  // Mixed vertices carry h-identified classes.
  std::vector<char> mixed(nv, 0);
  for (size_t v = 0; v < nv; ++v) mixed[v] = has_i1[v] && has_i2[v];
  for (size_t v = 0; v < nv; ++v)
    if (mixed[v] && !have_h)
      throw state_error("internal: mixed vertex without a gluing isometry");

  long long maxdim = 0;
  for (const auto& J : S) maxdim = std::max(maxdim, static_cast<long long>(J.size()));

  std::map<std::pair<int, std::vector<int>>, int> vertex_cls;    // (v, canonical J)
  std::map<std::pair<int, std::vector<int>>, int> interior_cls;  // (p, J)
  std::vector<LocalProduct> products;

  auto new_class = [&](const std::string& label, int dim, LocalProduct lp,
                       TypedComplexOfGroups::VertexType vt,
                       TypedComplexOfGroups::LocalShape shape) {
    const int id = static_cast<int>(out.cog.sub.vertices.size());
    out.cog.sub.vertices.push_back({label, dim});
    out.cog.locals.push_back(lp.group);
    products.push_back(std::move(lp));
    out.vtypes.push_back(std::move(vt));
    out.shapes.push_back(std::move(shape));
    return id;
  };

  // Vertex-side classes first (their generator copies keep bare names).
  for (size_t v = 0; v < nv; ++v) {
    for (const auto& J : S) {
      const bool j1 = contains(J, i1);
      const bool j2 = contains(J, i2);
      if (!j1 && !j2) continue;
      std::vector<int> key;
      std::vector<std::vector<int>> types;
      if (j1 && has_i1[v]) {
        key = J;
        types = {J};
        if (mixed[v]) types.push_back(h_type.at(J));
      } else if (j2 && has_i2[v] && !mixed[v]) {
        key = J;
        types = {J};
      } else {
        continue;  // i2-side classes of mixed vertices merge into the i1 key
      }
      if (vertex_cls.count({static_cast<int>(v), key})) continue;
      const int ik = j1 ? i1 : i2;
      std::vector<int> factors;
      for (int x : J)
        if (x != ik) factors.push_back(x);
      LocalProduct lp = make_product(g.vertex_groups[v], factors, spec);
      TypedComplexOfGroups::VertexType vt{types, "vertex " + g.graph.vertex_labels[v]};
      TypedComplexOfGroups::LocalShape shape{"G_" + g.graph.vertex_labels[v], factors};
      std::string label = g.graph.vertex_labels[v] + ":" + type_str(spec.racs, J);
      vertex_cls[{static_cast<int>(v), key}] =
          new_class(label, static_cast<int>(maxdim - static_cast<long long>(J.size())),
                    std::move(lp), std::move(vt), std::move(shape));
    }
  }
  for (size_t p = 0; p < g.graph.edge_pair_count(); ++p) {
    for (const auto& J : S) {
      if (contains(J, i1) || contains(J, i2)) continue;
      LocalProduct lp = make_product(g.edge_groups[p], J, spec);
      const std::string elabel = g.graph.edges[2 * p].label;
      TypedComplexOfGroups::VertexType vt{{J}, "edge " + elabel};
      TypedComplexOfGroups::LocalShape shape{"G_" + elabel, J};
      interior_cls[{static_cast<int>(p), J}] =
          new_class(elabel + ":" + type_str(spec.racs, J),
                    static_cast<int>(maxdim - static_cast<long long>(J.size())),
                    std::move(lp), std::move(vt), std::move(shape));
    }
  }

  // Class of the chamber-p cell of type J.
  auto cls_of = [&](int p, const std::vector<int>& J) {
    const bool j1 = contains(J, i1);
    const bool j2 = contains(J, i2);
    if (!j1 && !j2) return interior_cls.at({p, J});
    const int e = j1 ? i1_side[static_cast<size_t>(p)]
                     : g.graph.mate(i1_side[static_cast<size_t>(p)]);
    const int v = g.graph.edges[static_cast<size_t>(e)].iota;
    std::vector<int> key = J;
    if (j2 && mixed[static_cast<size_t>(v)]) key = h_inv.at(J);
    return vertex_cls.at({v, key});
  };

  // Subdivision edges, chamber by chamber. Within a chamber the pairs are
  // ordered with the i2-involving ones first so the documented spanning
  // tree runs through the i2 side.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> chamber_pairs;
  for (const auto& J : S)
    for (const auto& Jp : S) {
      if (J.size() >= Jp.size()) continue;
      if (!std::includes(Jp.begin(), Jp.end(), J.begin(), J.end())) continue;
      chamber_pairs.emplace_back(J, Jp);
    }
  std::stable_sort(chamber_pairs.begin(), chamber_pairs.end(),
                   [&](const auto& a, const auto& b) {
                     const int pa = contains(a.first, i2) || contains(a.second, i2) ? 0 : 1;
                     const int pb = contains(b.first, i2) || contains(b.second, i2) ? 0 : 1;
                     if (pa != pb) return pa < pb;
                     return a < b;
                   });

  // Face-internal edges are glued across chambers: keyed by the vertex and
  // the h-canonical pair.
  std::map<std::pair<int, std::pair<std::vector<int>, std::vector<int>>>, int> face_edge;
  std::vector<std::map<std::pair<std::vector<int>, std::vector<int>>, int>> chamber_edge(
      g.graph.edge_pair_count());

  for (size_t p = 0; p < g.graph.edge_pair_count(); ++p) {
    for (const auto& [J, Jp] : chamber_pairs) {
      const bool j1 = contains(J, i1);
      const bool j2 = contains(J, i2);
      const int from = cls_of(static_cast<int>(p), J);
      const int to = cls_of(static_cast<int>(p), Jp);
      const LocalProduct& fp = products[static_cast<size_t>(from)];
      const LocalProduct& tp = products[static_cast<size_t>(to)];
      int edge_id;
      if (j1 || j2) {
        // Inside the i_k-face: shared across all chambers at the vertex.
        const int e = j1 ? i1_side[static_cast<size_t>(p)]
                         : g.graph.mate(i1_side[static_cast<size_t>(p)]);
        const int v = g.graph.edges[static_cast<size_t>(e)].iota;
        std::pair<std::vector<int>, std::vector<int>> canon{J, Jp};
        if (j2 && mixed[static_cast<size_t>(v)]) canon = {h_inv.at(J), h_inv.at(Jp)};
        const auto it = face_edge.find({v, canon});
        if (it != face_edge.end()) {
          chamber_edge[p][{J, Jp}] = it->second;
          continue;
        }
        // Inclusion G_v x G_{J \ ik} -> G_v x G_{Jp \ ik}. Both classes
        // store their factors under the same (h-canonical) type keys.
        std::vector<Word> images;
        for (size_t b = 0; b < fp.base_ids.size(); ++b)
          images.push_back(Word{{Letter{tp.base_ids[b], +1}}});
        for (const auto& [type, gen] : fp.factor_ids) {
          (void)gen;
          images.push_back(Word{{Letter{tp.factor_ids.at(type), +1}}});
        }
        edge_id = static_cast<int>(out.cog.sub.edges.size());
        out.cog.sub.edges.push_back({from, to});
        out.cog.psi.push_back(std::move(images));
        face_edge[{v, canon}] = edge_id;
      } else {
        std::vector<Word> images;
        if (!contains(Jp, i1) && !contains(Jp, i2)) {
          // Natural inclusion G_e x G_J -> G_e x G_Jp.
          for (size_t b = 0; b < fp.base_ids.size(); ++b)
            images.push_back(Word{{Letter{tp.base_ids[b], +1}}});
          for (int x : J) images.push_back(Word{{Letter{tp.factor_ids.at(x), +1}}});
        } else {
          // alpha tensor inclusion into the vertex-side class. A merged
          // class reached through its i2 label stores the factors under
          // the h-preimage types.
          const int ik = contains(Jp, i1) ? i1 : i2;
          const int e = ik == i1 ? i1_side[static_cast<size_t>(p)]
                                 : g.graph.mate(i1_side[static_cast<size_t>(p)]);
          const int v = g.graph.edges[static_cast<size_t>(e)].iota;
          const bool through_h = ik == i2 && mixed[static_cast<size_t>(v)];
          // The alpha images are words over the vertex group's
          // presentation; relabel them into the target product's base.
          std::vector<int> base_map(tp.base_ids.size());
          for (size_t b = 0; b < tp.base_ids.size(); ++b) base_map[b] = tp.base_ids[b];
          for (const Word& w : g.edge_maps[static_cast<size_t>(e)].images)
            images.push_back(relabel(w, base_map));
          for (int x : J) {
            const int key = through_h ? h_elem_inv.at(x) : x;
            images.push_back(Word{{Letter{tp.factor_ids.at(key), +1}}});
          }
        }
        edge_id = static_cast<int>(out.cog.sub.edges.size());
        out.cog.sub.edges.push_back({from, to});
        out.cog.psi.push_back(std::move(images));
      }
      chamber_edge[p][{J, Jp}] = edge_id;
    }
  }

  // Composable pairs from the chamber chains J < J' < J''.
  std::set<std::tuple<int, int, int>> comp_seen;
  for (size_t p = 0; p < g.graph.edge_pair_count(); ++p) {
    for (const auto& [J, Jp] : chamber_pairs) {
      for (const auto& [J2, Jpp] : chamber_pairs) {
        if (J2 != Jp) continue;
        const int b = chamber_edge[p].at({J, Jp});
        const int a = chamber_edge[p].at({Jp, Jpp});
        const int ab = chamber_edge[p].at({J, Jpp});
        if (comp_seen.insert({a, b, ab}).second)
          out.cog.sub.composables.push_back({a, b, ab});
      }
    }
  }
  out.cog.twists.assign(out.cog.sub.composables.size(), -1);
  out.cog.validate();
  {
    const CocycleReport cr = cocycle_check(out.cog);
    if (!cr.ok) throw state_error("internal: functor image fails cocycle check: " + cr.failure);
  }
  // Audit: one chamber cone per input edge pair.
  {
    long long cones = 0;
    for (const auto& vt : out.vtypes)
      if (vt.types.at(0).empty()) ++cones;
    if (cones != static_cast<long long>(g.graph.edge_pair_count()))
      throw state_error("internal: chamber count does not match the input edge pairs");
  }

  // Base vertex: the cone class of the least-labeled input edge.
  {
    size_t best = 0;
    for (size_t p = 1; p < g.graph.edge_pair_count(); ++p)
      if (g.graph.edges[2 * p].label < g.graph.edges[2 * best].label) best = p;
    out.base_vertex = interior_cls.at({static_cast<int>(best), {}});
  }

  // Lattice metadata propagation.
  if (g.lattice) {
    ComplexLatticeAssertions meta;
    meta.ambient = g.lattice->ambient;
    meta.locals_commensurable = g.lattice->locals_commensurable;
    meta.locals_verified = false;
    meta.vertex_data.resize(out.cog.sub.vertices.size());
    for (const auto& [key, cls] : vertex_cls) {
      const auto& src = g.lattice->vertex_data[static_cast<size_t>(key.first)];
      Int kernel = src.kernel_order;
      for (int x : out.shapes[static_cast<size_t>(cls)].cyclic_types)
        kernel *= Int(spec.q[static_cast<size_t>(x)]);
      meta.vertex_data[static_cast<size_t>(cls)] = {src.mu, kernel, false};
    }
    for (const auto& [key, cls] : interior_cls) {
      const auto& src = g.lattice->edge_data[static_cast<size_t>(key.first)];
      Int kernel = src.kernel_order;
      for (int x : out.shapes[static_cast<size_t>(cls)].cyclic_types)
        kernel *= Int(spec.q[static_cast<size_t>(x)]);
      meta.vertex_data[static_cast<size_t>(cls)] = {src.mu, kernel, false};
    }
    meta.edge_psi.assign(out.cog.sub.edges.size(), "1");
    for (size_t p = 0; p < g.graph.edge_pair_count(); ++p) {
      std::string image = "1";
      for (const auto& sl : g.lattice->stable_letters)
        if (sl.edge_label == g.graph.edges[2 * p].label) image = sl.psi_image;
      // The subdivided graph edges inherit the stable-letter image.
      for (const auto& J : {std::vector<int>{i1}, std::vector<int>{i2}}) {
        const auto it = chamber_edge[p].find({{}, J});
        if (it != chamber_edge[p].end())
          meta.edge_psi[static_cast<size_t>(it->second)] = image;
      }
    }
    out.lattice = std::move(meta);
  }
  return out;
}

Presentation typed_fundamental_group(const TypedComplexOfGroups& t,
                                     std::vector<CogGeneratorOrigin>* origins) {
  const std::vector<int> tree = t.cog.sub.spanning_tree_from(t.base_vertex);
  return fundamental_group_cog(t.cog, tree, origins);
}

ThomasResult thomas(const GraphOfGroups& g, const BuildingSpec& spec, int i1, int i2,
                    bool override_t2) {
  ThomasResult out{F2(F1(g), spec, i1, i2, override_t2), {}};

  std::vector<CogGeneratorOrigin> origins;
  const Presentation raw = typed_fundamental_group(out.complex, &origins);
  std::map<std::string, std::string> want;
  TietzeOptions opts;
  for (size_t i = 0; i < raw.generators.size(); ++i) {
    const std::string tok = raw.generators[i].token();
    const auto& og = origins[i];
    want[tok] = og.desired;
    if (og.cls < 0) {
      opts.letters.insert(tok);
      continue;
    }
    // Keep, when possible: untouched copies of vertex-group generators and
    // of the cyclic residue factors. Interior base copies (edge-group
    // generators) are always fair game; so are uniquified duplicates.
    if (tok != og.desired) continue;
    const auto& shape = out.complex.shapes[static_cast<size_t>(og.cls)];
    const size_t ngens =
        out.complex.cog.locals[static_cast<size_t>(og.cls)].presentation().generator_count();
    const size_t base_count = ngens - shape.cyclic_types.size();
    const bool vertex_side =
        out.complex.vtypes[static_cast<size_t>(og.cls)].source.rfind("vertex", 0) == 0;
    const bool cyclic_factor = static_cast<size_t>(og.position) >= base_count;
    if (vertex_side || cyclic_factor) opts.preferred_keep.insert(tok);
  }

  Presentation simplified = simplify_presentation(raw, opts);

  // Deterministic renaming: each survivor reverts to its original local
  // token when no other survivor competes for it; edge letters become
  // t, t2, ...
  std::set<std::string> reserved;
  for (const auto& gs : simplified.generators) reserved.insert(gs.token());
  std::vector<GeneratorSymbol> renamed;
  std::set<std::string> taken;
  int t_count = 0;
  for (const auto& gs : simplified.generators) {
    const std::string cur = gs.token();
    std::string w = want.count(cur) ? want[cur] : cur;
    if (w == "t") {
      ++t_count;
      if (t_count > 1) w = "t" + std::to_string(t_count);
    }
    reserved.erase(cur);
    if (w != cur && (taken.count(w) || reserved.count(w))) w = cur;
    while (taken.count(w)) w += "_";
    taken.insert(w);
    renamed.push_back(GeneratorSymbol::parse(w));
  }
  simplified.generators = std::move(renamed);
  out.presentation = std::move(simplified);
  return out;
}

}  // namespace gogkit
