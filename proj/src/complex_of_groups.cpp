#include "gogkit/complex_of_groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "gogkit/budget.hpp"
#include "gogkit/errors.hpp"

namespace gogkit {

bool ComplexOfGroups::simple() const {
  for (int t : twists)
    if (t >= 0) {
      // An explicit identity element still counts as trivial.
      return false;
    }
  return true;
}

namespace {

// Image of every source element under a structure map, by BFS through the
// source Cayley graph. Verifies the map is a monomorphism.
std::vector<int> psi_elements(const FiniteGroup& src, const Presentation& /*srcp*/,
                              const FiniteGroup& dst, const Presentation& dstp,
                              const std::vector<Word>& images, const std::string& where) {
  std::vector<int> gen_imgs;
  for (const Word& w : images) gen_imgs.push_back(dst.evaluate(w, dstp));
  std::vector<int> img(static_cast<size_t>(src.order()), -1);
  img[static_cast<size_t>(src.identity())] = dst.identity();
  std::vector<int> queue{src.identity()};
  const auto& gens = src.generators();
  if (gens.size() != gen_imgs.size())
    throw input_error("structure map image count mismatch at " + where);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int x = queue[qi];
    for (size_t g = 0; g < gens.size(); ++g) {
      const int y = src.mul(x, gens[g].second);
      if (img[static_cast<size_t>(y)] < 0) {
        img[static_cast<size_t>(y)] =
            dst.mul(img[static_cast<size_t>(x)], gen_imgs[g]);
        queue.push_back(y);
      }
    }
  }
  for (int x = 0; x < src.order(); ++x)
    if (img[static_cast<size_t>(x)] < 0)
      throw input_error("named generators do not generate the local group at " + where);
  // Homomorphism and injectivity, elementwise.
  for (int a = 0; a < src.order(); ++a)
    for (int b = 0; b < src.order(); ++b)
      if (img[static_cast<size_t>(src.mul(a, b))] !=
          dst.mul(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]))
        throw input_error("structure map is not a homomorphism at " + where);
  std::set<int> distinct(img.begin(), img.end());
  if (distinct.size() != img.size())
    throw input_error("structure map is not injective at " + where);
  return img;
}

}  // namespace

void ComplexOfGroups::validate() const {
  sub.validate();
  if (locals.size() != sub.vertices.size()) throw input_error("local group count mismatch");
  if (psi.size() != sub.edges.size()) throw input_error("structure map count mismatch");
  if (!twists.empty() && twists.size() != sub.composables.size())
    throw input_error("twist count mismatch");
  for (size_t e = 0; e < sub.edges.size(); ++e) {
    const auto& src = locals[static_cast<size_t>(sub.edges[e].from)];
    const auto& dst = locals[static_cast<size_t>(sub.edges[e].to)];
    const Presentation sp = src.presentation();
    const Presentation dp = dst.presentation();
    if (psi[e].size() != sp.generator_count())
      throw input_error("structure map image count mismatch on edge " + std::to_string(e));
    for (const Word& w : psi[e])
      for (const Letter& l : w.letters)
        if (l.gen < 0 || static_cast<size_t>(l.gen) >= dp.generator_count())
          throw input_error("structure map image over unknown target generator");
    if (src.finite() && dst.finite())
      psi_elements(src.table(), sp, dst.table(), dp, psi[e],
                   "edge " + std::to_string(e));
  }
  for (size_t k = 0; k < twists.size(); ++k) {
    if (twists[k] < 0) continue;
    const int target = sub.edges[static_cast<size_t>(sub.composables[k].a)].to;
    if (!locals[static_cast<size_t>(target)].finite())
      throw input_error("nontrivial twisting element over a symbolic local group");
    if (twists[k] >= locals[static_cast<size_t>(target)].table().order())
      throw input_error("twisting element out of range");
  }
}

CocycleReport cocycle_check(const ComplexOfGroups& c) {
  c.validate();
  CocycleReport rep;
  bool all_finite = true;
  for (const auto& lg : c.locals) all_finite = all_finite && lg.finite();
  if (c.simple() && !all_finite) return rep;  // trivially true
  if (!c.simple() && !all_finite)
    throw input_error("cocycle check unverifiable: nontrivial twists over symbolic groups");

  // Element maps per edge.
  std::vector<std::vector<int>> maps(c.sub.edges.size());
  std::vector<Presentation> pres(c.locals.size());
  for (size_t v = 0; v < c.locals.size(); ++v) pres[v] = c.locals[v].presentation();
  for (size_t e = 0; e < c.sub.edges.size(); ++e)
    maps[e] = psi_elements(c.locals[static_cast<size_t>(c.sub.edges[e].from)].table(),
                           pres[static_cast<size_t>(c.sub.edges[e].from)],
                           c.locals[static_cast<size_t>(c.sub.edges[e].to)].table(),
                           pres[static_cast<size_t>(c.sub.edges[e].to)], c.psi[e],
                           "edge " + std::to_string(e));

  auto twist_of = [&](int a, int b) -> int {
    for (size_t k = 0; k < c.sub.composables.size(); ++k)
      if (c.sub.composables[k].a == a && c.sub.composables[k].b == b)
        return k < c.twists.size() ? c.twists[k] : -1;
    return -2;  // not composable
  };

  // Condition 1: Ad(g_{a,b}) psi_ab = psi_a psi_b, elementwise.
  for (size_t k = 0; k < c.sub.composables.size(); ++k) {
    const auto& comp = c.sub.composables[k];
    const int a = comp.a, b = comp.b, ab = comp.ab;
    const int rho = c.sub.edges[static_cast<size_t>(b)].from;
    const int tau = c.sub.edges[static_cast<size_t>(a)].to;
    const FiniteGroup& gt = c.locals[static_cast<size_t>(tau)].table();
    const int g = (k < c.twists.size() && c.twists[k] >= 0) ? c.twists[k] : gt.identity();
    const int n = c.locals[static_cast<size_t>(rho)].table().order();
    for (int x = 0; x < n; ++x) {
      const int lhs = gt.mul(gt.mul(g, maps[static_cast<size_t>(ab)][static_cast<size_t>(x)]),
                             gt.inv(g));
      const int rhs =
          maps[static_cast<size_t>(a)][static_cast<size_t>(
              maps[static_cast<size_t>(b)][static_cast<size_t>(x)])];
      if (lhs != rhs) {
        rep.ok = false;
        rep.failure = "Ad(g)psi_ab != psi_a psi_b on composable pair (" +
                      std::to_string(a) + "," + std::to_string(b) + ")";
        return rep;
      }
    }
  }

  // Condition 2: cocycle on composable triples.
  for (const auto& cab : c.sub.composables) {
    for (const auto& cbc : c.sub.composables) {
      if (cbc.a != cab.b) continue;  // need (a,b) and (b,c)
      const int a = cab.a, b = cab.b, cc = cbc.b;
      const int bc = cbc.ab;
      const int ab = cab.ab;
      const int g_bc = twist_of(b, cc);
      const int g_a_bc = twist_of(a, bc);
      const int g_ab = twist_of(a, b);
      const int g_ab_c = twist_of(ab, cc);
      if (g_a_bc == -2 || g_ab_c == -2) continue;  // chain not closed in the data
      const int tau = c.sub.edges[static_cast<size_t>(a)].to;
      const FiniteGroup& gt = c.locals[static_cast<size_t>(tau)].table();
      auto elem = [&](int t) { return t >= 0 ? t : gt.identity(); };
      // psi_a(g_{b,c}) g_{a,bc} = g_{a,b} g_{ab,c}
      const int lhs = gt.mul(maps[static_cast<size_t>(a)][static_cast<size_t>(elem(g_bc))],
                             elem(g_a_bc));
      const int rhs = gt.mul(elem(g_ab), elem(g_ab_c));
      if (lhs != rhs) {
        rep.ok = false;
        rep.failure = "cocycle fails on triple (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(cc) + ")";
        return rep;
      }
    }
  }
  return rep;
}

Presentation fundamental_group_cog(const ComplexOfGroups& c,
                                   std::optional<std::vector<int>> spanning_tree,
                                   std::vector<CogGeneratorOrigin>* origins) {
  c.validate();
  if (!c.sub.connected()) throw input_error("subdivision graph must be connected");
  const std::vector<int> tree =
      spanning_tree ? *spanning_tree : c.sub.spanning_tree_edges();
  const std::set<int> tree_set(tree.begin(), tree.end());

  Presentation out;
  if (origins) origins->clear();
  std::set<std::string> used;
  auto alloc = [&used](const std::string& want, const std::string& suffix) {
    if (used.insert(want).second) return want;
    std::string name = want + "_" + suffix;
    int k = 2;
    while (!used.insert(name).second) name = want + "_" + suffix + std::to_string(k++);
    return name;
  };

  std::vector<Presentation> pres(c.locals.size());
  std::vector<std::vector<int>> gen_ids(c.locals.size());
  for (size_t v = 0; v < c.locals.size(); ++v) {
    pres[v] = c.locals[v].presentation();
    for (size_t gpos = 0; gpos < pres[v].generators.size(); ++gpos) {
      const auto& gs = pres[v].generators[gpos];
      gen_ids[v].push_back(out.add_generator(
          GeneratorSymbol::parse(alloc(gs.token(), c.sub.vertices[v].label))));
      if (origins)
        origins->push_back({gs.token(), static_cast<int>(v), static_cast<int>(gpos)});
    }
  }
  std::vector<int> letter(c.sub.edges.size(), -1);
  for (size_t e = 0; e < c.sub.edges.size(); ++e) {
    if (tree_set.count(static_cast<int>(e))) continue;
    letter[e] = out.add_generator(
        GeneratorSymbol::parse(alloc("y" + std::to_string(e), "e")));
    if (origins) origins->push_back({"t", -1, static_cast<int>(e)});
  }
  auto letter_word = [&](size_t e, int sign) {
    if (letter[e] < 0) return Word{};
    return Word{{Letter{letter[e], sign}}};
  };

  for (size_t v = 0; v < c.locals.size(); ++v)
    for (const Word& r : pres[v].relators) out.add_relator(relabel(r, gen_ids[v]));

  // psi_e(x) = e+ x e- for every source generator x.
  for (size_t e = 0; e < c.sub.edges.size(); ++e) {
    const size_t from = static_cast<size_t>(c.sub.edges[e].from);
    const size_t to = static_cast<size_t>(c.sub.edges[e].to);
    for (size_t x = 0; x < pres[from].generator_count(); ++x) {
      const Word lhs = concat(
          concat(letter_word(e, +1), Word{{Letter{gen_ids[from][x], +1}}}),
          letter_word(e, -1));
      const Word rhs = relabel(c.psi[e][x], gen_ids[to]);
      out.add_relator(concat(lhs, inverse(rhs)));
    }
  }

  // e+ f+ = g_{e,f} (ef)+ on composable pairs.
  for (size_t k = 0; k < c.sub.composables.size(); ++k) {
    const auto& comp = c.sub.composables[k];
    Word tw;
    if (k < c.twists.size() && c.twists[k] >= 0) {
      const size_t tau = static_cast<size_t>(c.sub.edges[static_cast<size_t>(comp.a)].to);
      tw = relabel(c.locals[tau].table().element_word(c.twists[k]), gen_ids[tau]);
    }
    Word rel = concat(letter_word(static_cast<size_t>(comp.a), +1),
                      letter_word(static_cast<size_t>(comp.b), +1));
    rel = concat(rel, letter_word(static_cast<size_t>(comp.ab), -1));
    rel = concat(rel, inverse(tw));
    out.add_relator(rel);
  }
  return out;
}

namespace {

struct DevState {
  struct C {
    int cls = 0;
    int depth = 0;
    bool alive = true;
    std::string label;
    std::map<int, std::pair<int, int>> face;      // edge -> (cell, coset elem)
    std::map<std::pair<int, int>, int> corona;    // (edge, coset class) -> cell
  };
  std::vector<C> cells;
  std::vector<int> uf;
  std::deque<std::pair<int, int>> merge_queue;
  std::deque<int> work;
  bool developable = true;
  std::string witness;
  long long budget = 0;

  const ComplexOfGroups* cx = nullptr;
  std::vector<std::vector<int>> psi_map;           // per edge, element map
  std::vector<std::vector<int>> image_subgroup;    // per edge, sorted
  std::vector<char> covering;                      // per edge

  int find(int x) {
    while (uf[static_cast<size_t>(x)] != x) {
      uf[static_cast<size_t>(x)] = uf[static_cast<size_t>(uf[static_cast<size_t>(x)])];
      x = uf[static_cast<size_t>(x)];
    }
    return x;
  }

  const FiniteGroup& group_at(int cls) const {
    return cx->locals[static_cast<size_t>(cls)].table();
  }

  int coset_class(int edge, int elem) const {
    const FiniteGroup& g = group_at(cx->sub.edges[static_cast<size_t>(edge)].to);
    return g.min_coset_rep(elem, image_subgroup[static_cast<size_t>(edge)]);
  }

  int create(int cls, int depth, const std::string& label) {
    if (static_cast<long long>(cells.size()) >= budget)
      throw budget_error("development exceeded cell budget");
    cells.push_back(C{cls, depth, true, label, {}, {}});
    uf.push_back(static_cast<int>(cells.size()) - 1);
    work.push_back(static_cast<int>(cells.size()) - 1);
    return static_cast<int>(cells.size()) - 1;
  }

  void fail(const std::string& why) {
    developable = false;
    if (witness.empty()) witness = why;
  }

  void set_face(int d, int edge, int w, int coset) {
    d = find(d);
    w = find(w);
    auto it = cells[static_cast<size_t>(d)].face.find(edge);
    if (it != cells[static_cast<size_t>(d)].face.end()) {
      const int w0 = find(it->second.first);
      if (w0 != w) merge_queue.emplace_back(w0, w);
      if (coset_class(edge, it->second.second) != coset_class(edge, coset))
        fail("conflicting coset charts along edge " + std::to_string(edge) + " at cell " +
             cells[static_cast<size_t>(d)].label);
      drain();
      return;
    }
    cells[static_cast<size_t>(d)].face[edge] = {w, coset};
    const std::pair<int, int> slot{edge, coset_class(edge, coset)};
    auto cit = cells[static_cast<size_t>(w)].corona.find(slot);
    if (cit != cells[static_cast<size_t>(w)].corona.end()) {
      merge_queue.emplace_back(d, cit->second);
    } else {
      cells[static_cast<size_t>(w)].corona[slot] = d;
    }
    drain();
  }

  void drain() {
    while (!merge_queue.empty()) {
      auto [x, y] = merge_queue.front();
      merge_queue.pop_front();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      C& sx = cells[static_cast<size_t>(x)];
      C& sy = cells[static_cast<size_t>(y)];
      if (sx.cls != sy.cls) {
        fail("development identifies cells of different types");
        uf[static_cast<size_t>(y)] = x;
        sy.alive = false;
        continue;
      }
      uf[static_cast<size_t>(y)] = x;
      sy.alive = false;
      sx.depth = std::min(sx.depth, sy.depth);
      for (const auto& [edge, fc] : sy.face) {
        auto it = sx.face.find(edge);
        if (it == sx.face.end()) {
          sx.face[edge] = fc;
          // Register the surviving cell in the face's corona slot.
          const int w = find(fc.first);
          const std::pair<int, int> slot{edge, coset_class(edge, fc.second)};
          auto cit = cells[static_cast<size_t>(w)].corona.find(slot);
          if (cit != cells[static_cast<size_t>(w)].corona.end()) {
            if (find(cit->second) != x) merge_queue.emplace_back(cit->second, x);
          } else {
            cells[static_cast<size_t>(w)].corona[slot] = x;
          }
        } else {
          if (find(it->second.first) != find(fc.first))
            merge_queue.emplace_back(it->second.first, fc.first);
          if (coset_class(edge, it->second.second) != coset_class(edge, fc.second))
            fail("merged cell carries conflicting charts along edge " + std::to_string(edge));
        }
      }
      for (const auto& [slot, cell] : sy.corona) {
        auto it = sx.corona.find(slot);
        if (it == sx.corona.end()) {
          sx.corona[slot] = cell;
        } else if (find(it->second) != find(cell)) {
          merge_queue.emplace_back(it->second, cell);
        }
      }
      work.push_back(x);
    }
  }

  void resolve_faces(int d0) {
    const int d = find(d0);
    const int cls = cells[static_cast<size_t>(d)].cls;
    // Downward edges from this class, intermediates (larger targets) first.
    std::vector<int> down;
    for (size_t e = 0; e < cx->sub.edges.size(); ++e)
      if (cx->sub.edges[e].from == cls) down.push_back(static_cast<int>(e));
    std::stable_sort(down.begin(), down.end(), [&](int a, int b) {
      return cx->sub.vertices[static_cast<size_t>(cx->sub.edges[static_cast<size_t>(a)].to)].dim >
             cx->sub.vertices[static_cast<size_t>(cx->sub.edges[static_cast<size_t>(b)].to)].dim;
    });
    for (int b : down) {
      const int dd = find(d);
      if (cells[static_cast<size_t>(dd)].face.count(b)) continue;
      const int tau = cx->sub.edges[static_cast<size_t>(b)].to;
      const FiniteGroup& gt = group_at(tau);
      // Candidates through already-assigned intermediate faces.
      int w_found = -1, k_found = -1;
      for (size_t ci = 0; ci < cx->sub.composables.size(); ++ci) {
        const auto& comp = cx->sub.composables[ci];
        if (comp.ab != b) continue;
        const auto mit = cells[static_cast<size_t>(dd)].face.find(comp.b);
        if (mit == cells[static_cast<size_t>(dd)].face.end()) continue;
        const int m = find(mit->second.first);
        const int k = mit->second.second;
        const auto wit = cells[static_cast<size_t>(m)].face.find(comp.a);
        if (wit == cells[static_cast<size_t>(m)].face.end()) continue;
        const int w = find(wit->second.first);
        const int cprime = wit->second.second;
        const int tw = (ci < cx->twists.size() && cx->twists[ci] >= 0)
                           ? cx->twists[ci]
                           : gt.identity();
        const int k_total =
            gt.mul(gt.mul(cprime,
                          psi_map[static_cast<size_t>(comp.a)][static_cast<size_t>(k)]),
                   tw);
        if (w_found < 0) {
          w_found = w;
          k_found = k_total;
        } else {
          if (find(w_found) != w) merge_queue.emplace_back(w_found, w);
          if (coset_class(b, k_found) != coset_class(b, k_total))
            fail("inconsistent charts while resolving edge " + std::to_string(b));
          drain();
        }
      }
      if (w_found < 0) {
        const int dd2 = find(d);
        w_found = create(tau, cells[static_cast<size_t>(dd2)].depth + 1,
                         cells[static_cast<size_t>(dd2)].label + "." +
                             cx->sub.vertices[static_cast<size_t>(tau)].label);
        k_found = gt.identity();
      }
      set_face(find(d), b, find(w_found), k_found);
      // Back-fill missing intermediate faces from the composite chart.
      for (size_t ci = 0; ci < cx->sub.composables.size(); ++ci) {
        const auto& comp = cx->sub.composables[ci];
        if (comp.ab != b) continue;
        const int dd3 = find(d);
        const auto mit = cells[static_cast<size_t>(dd3)].face.find(comp.b);
        if (mit == cells[static_cast<size_t>(dd3)].face.end()) continue;
        const int m = find(mit->second.first);
        if (cells[static_cast<size_t>(m)].face.count(comp.a)) continue;
        const int k = mit->second.second;
        const auto fit = cells[static_cast<size_t>(dd3)].face.find(b);
        if (fit == cells[static_cast<size_t>(dd3)].face.end()) continue;
        const int tw = (ci < cx->twists.size() && cx->twists[ci] >= 0)
                           ? cx->twists[ci]
                           : gt.identity();
        // k_total = c' psi_a(k) g  =>  c' = k_total g^-1 psi_a(k)^-1
        const int cprime = gt.mul(
            gt.mul(fit->second.second, gt.inv(tw)),
            gt.inv(psi_map[static_cast<size_t>(comp.a)][static_cast<size_t>(k)]));
        set_face(m, comp.a, find(fit->second.first), cprime);
      }
    }
  }
};

}  // namespace

DevBall develop_ball(const ComplexOfGroups& c, int base_vertex, int radius, long long budget) {
  if (radius < 0) throw input_error("radius must be nonnegative");
  if (budget <= 0) budget = budgets::dev_cells();
  for (const auto& lg : c.locals)
    if (!lg.finite()) throw input_error("develop_ball requires finite local groups");
  const CocycleReport cr = cocycle_check(c);
  if (!cr.ok) throw input_error("develop_ball requires a valid complex: " + cr.failure);
  if (base_vertex < 0 || static_cast<size_t>(base_vertex) >= c.sub.vertices.size())
    throw input_error("base vertex out of range");

  DevState st;
  st.cx = &c;
  st.budget = budget;
  std::vector<Presentation> pres(c.locals.size());
  for (size_t v = 0; v < c.locals.size(); ++v) pres[v] = c.locals[v].presentation();
  st.psi_map.resize(c.sub.edges.size());
  st.image_subgroup.resize(c.sub.edges.size());
  for (size_t e = 0; e < c.sub.edges.size(); ++e) {
    st.psi_map[e] = psi_elements(c.locals[static_cast<size_t>(c.sub.edges[e].from)].table(),
                                 pres[static_cast<size_t>(c.sub.edges[e].from)],
                                 c.locals[static_cast<size_t>(c.sub.edges[e].to)].table(),
                                 pres[static_cast<size_t>(c.sub.edges[e].to)], c.psi[e],
                                 "edge " + std::to_string(e));
    std::vector<int> img = st.psi_map[e];
    std::sort(img.begin(), img.end());
    st.image_subgroup[e] = std::move(img);
  }
  st.covering.assign(c.sub.edges.size(), 1);
  for (const auto& comp : c.sub.composables) st.covering[static_cast<size_t>(comp.ab)] = 0;

  st.create(base_vertex, 0, c.sub.vertices[static_cast<size_t>(base_vertex)].label);

  while (!st.work.empty()) {
    const int u0 = st.work.front();
    st.work.pop_front();
    const int u = st.find(u0);
    if (!st.cells[static_cast<size_t>(u)].alive) continue;
    if (st.cells[static_cast<size_t>(u)].depth >= radius) continue;
    const int cls = st.cells[static_cast<size_t>(u)].cls;
    for (size_t a = 0; a < c.sub.edges.size(); ++a) {
      if (!st.covering[a] || c.sub.edges[a].to != cls) continue;
      const FiniteGroup& gt = st.group_at(cls);
      const std::vector<int> reps = gt.left_coset_reps(st.image_subgroup[a]);
      for (int rep : reps) {
        const int uu = st.find(u);
        const std::pair<int, int> slot{static_cast<int>(a), rep};
        if (st.cells[static_cast<size_t>(uu)].corona.count(slot)) continue;
        const int d = st.create(
            c.sub.edges[a].from, st.cells[static_cast<size_t>(uu)].depth + 1,
            st.cells[static_cast<size_t>(uu)].label + "/" +
                c.sub.vertices[static_cast<size_t>(c.sub.edges[a].from)].label + "[" +
                gt.element_name(rep) + "]");
        st.set_face(d, static_cast<int>(a), uu, rep);
        st.resolve_faces(d);
      }
    }
  }

  DevBall ball;
  ball.radius = radius;
  ball.developable = st.developable;
  ball.witness = st.witness;
  std::map<int, int> out_id;
  for (size_t i = 0; i < st.cells.size(); ++i) {
    if (st.find(static_cast<int>(i)) != static_cast<int>(i)) continue;
    if (!st.cells[i].alive || st.cells[i].depth > radius) continue;
    out_id[static_cast<int>(i)] = static_cast<int>(ball.cells.size());
    ball.cells.push_back({st.cells[i].cls, st.cells[i].depth, st.cells[i].label});
  }
  for (size_t i = 0; i < st.cells.size(); ++i) {
    if (st.find(static_cast<int>(i)) != static_cast<int>(i) || !st.cells[i].alive) continue;
    const auto uit = out_id.find(static_cast<int>(i));
    if (uit == out_id.end()) continue;
    for (const auto& [edge, fc] : st.cells[i].face) {
      const int w = st.find(fc.first);
      const auto wit = out_id.find(w);
      if (wit == out_id.end()) continue;
      const FiniteGroup& gt = st.group_at(c.sub.edges[static_cast<size_t>(edge)].to);
      ball.incidences.push_back(
          {uit->second, wit->second, edge, gt.element_name(st.coset_class(edge, fc.second))});
    }
  }
  return ball;
}

std::string dot_dev_ball(const DevBall& ball, const ComplexOfGroups& c) {
  std::ostringstream os;
  os << "graph development {\n";
  for (size_t i = 0; i < ball.cells.size(); ++i)
    os << "  d" << i << " [label=\"" << c.sub.vertices[static_cast<size_t>(ball.cells[i].cls)].label
       << " / " << ball.cells[i].label << "\"];\n";
  for (const auto& inc : ball.incidences)
    os << "  d" << inc.upper << " -- d" << inc.lower << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace gogkit
