#include "gogkit/flag_complex.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <json.hpp>

#include "gogkit/errors.hpp"

namespace gogkit {

int FlagComplex::add_vertex(const std::string& label) {
  vertices.push_back(label);
  return static_cast<int>(vertices.size()) - 1;
}

void FlagComplex::add_edge(int a, int b) {
  if (a == b) throw input_error("flag complex has no loops");
  if (a > b) std::swap(a, b);
  edges.insert({a, b});
}

bool FlagComplex::adjacent(int a, int b) const {
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  return edges.count({a, b}) != 0;
}

int FlagComplex::index_of(const std::string& label) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return static_cast<int>(i);
  return -1;
}

void FlagComplex::validate() const {
  std::set<std::string> names(vertices.begin(), vertices.end());
  if (names.size() != vertices.size()) throw input_error("duplicate vertex labels");
  for (const auto& [a, b] : edges)
    if (a < 0 || b < 0 || static_cast<size_t>(a) >= vertices.size() ||
        static_cast<size_t>(b) >= vertices.size() || a >= b)
      throw input_error("flag complex edge out of range");
}

bool labeled_graph_equal(const FlagComplex& a, const FlagComplex& b) {
  std::set<std::string> va(a.vertices.begin(), a.vertices.end());
  std::set<std::string> vb(b.vertices.begin(), b.vertices.end());
  if (va != vb) return false;
  std::set<std::pair<std::string, std::string>> ea, eb;
  auto norm = [](const std::string& x, const std::string& y) {
    return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
  };
  for (const auto& [x, y] : a.edges)
    ea.insert(norm(a.vertices[static_cast<size_t>(x)], a.vertices[static_cast<size_t>(y)]));
  for (const auto& [x, y] : b.edges)
    eb.insert(norm(b.vertices[static_cast<size_t>(x)], b.vertices[static_cast<size_t>(y)]));
  return ea == eb;
}

FlagComplex double_complex(const FlagComplex& j, const std::vector<int>& v) {
  j.validate();
  std::set<int> marked(v.begin(), v.end());
  for (int x : v)
    if (x < 0 || static_cast<size_t>(x) >= j.vertices.size())
      throw input_error("double: marked vertex out of range");
  FlagComplex d;
  // Vertex map: unsigned copy or a +/- pair.
  std::map<int, std::pair<int, int>> copies;  // original -> (plus, minus) or (id,-1)
  for (size_t x = 0; x < j.vertices.size(); ++x) {
    if (marked.count(static_cast<int>(x))) {
      const int p = d.add_vertex(j.vertices[x] + "+");
      const int m = d.add_vertex(j.vertices[x] + "-");
      copies[static_cast<int>(x)] = {p, m};
    } else {
      const int u = d.add_vertex(j.vertices[x]);
      copies[static_cast<int>(x)] = {u, -1};
    }
  }
  auto instances = [&](int x) {
    std::vector<int> out{copies[x].first};
    if (copies[x].second >= 0) out.push_back(copies[x].second);
    return out;
  };
  for (const auto& [x, y] : j.edges)
    for (int ix : instances(x))
      for (int iy : instances(y)) d.add_edge(ix, iy);
  return d;
}

FlagComplex wedge(const FlagComplex& k, int copies) {
  k.validate();
  if (copies < 1) throw input_error("wedge needs at least one copy");
  if (k.vertices.empty()) throw input_error("wedge needs a basepoint");
  if (copies == 1) return k;
  FlagComplex w;
  w.add_vertex(k.vertices[0]);  // basepoint is the first-listed vertex
  std::vector<std::vector<int>> vmap(static_cast<size_t>(copies),
                                     std::vector<int>(k.vertices.size(), 0));
  for (int c = 0; c < copies; ++c) {
    for (size_t x = 1; x < k.vertices.size(); ++x)
      vmap[static_cast<size_t>(c)][x] =
          w.add_vertex(k.vertices[x] + "_" + std::to_string(c + 1));
    for (const auto& [x, y] : k.edges)
      w.add_edge(vmap[static_cast<size_t>(c)][static_cast<size_t>(x)],
                 vmap[static_cast<size_t>(c)][static_cast<size_t>(y)]);
  }
  return w;
}

namespace {

// Wedge-shape validation: with the basepoint removed, each component must
// contain at most one marked vertex, and the basepoint is unmarked.
void check_cover_shape(const FlagComplex& l, const std::set<int>& marked) {
  if (l.vertices.size() == 1) return;  // single vertex: degenerate cover
  if (marked.count(0)) throw input_error("salvetti_link: basepoint cannot be marked");
  const size_t n = l.vertices.size();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (size_t start = 1; start < n; ++start) {
    if (comp[start] >= 0) continue;
    std::deque<size_t> q{start};
    comp[start] = ncomp;
    while (!q.empty()) {
      const size_t x = q.front();
      q.pop_front();
      for (size_t y = 1; y < n; ++y)
        if (comp[y] < 0 && l.adjacent(static_cast<int>(x), static_cast<int>(y))) {
          comp[y] = ncomp;
          q.push_back(y);
        }
    }
    ++ncomp;
  }
  std::vector<int> marks(static_cast<size_t>(ncomp), 0);
  for (int m : marked) ++marks[static_cast<size_t>(comp[static_cast<size_t>(m)])];
  for (int c = 0; c < ncomp; ++c)
    if (marks[static_cast<size_t>(c)] > 1)
      throw input_error("salvetti_link: a wedge copy carries two marked vertices");
  for (const auto& [a, b] : l.edges)
    if (marked.count(a) && marked.count(b))
      throw input_error("salvetti_link: marked vertices must generate a free subgroup");
}

}  // namespace

FlagComplex salvetti_link(const FlagComplex& l, const std::vector<int>& v) {
  l.validate();
  std::set<int> marked(v.begin(), v.end());
  for (int x : v)
    if (x < 0 || static_cast<size_t>(x) >= l.vertices.size())
      throw input_error("salvetti_link: marked vertex out of range");
  if (!marked.empty()) check_cover_shape(l, marked);

  // Star of a vertex in the cover: per marked direction one outgoing and
  // one incoming tree edge (two distinct ends), per unmarked vertex the
  // two ends of a loop. Square corners connect ends of distinct
  // directions exactly when the directions span an edge of l. Loop-end
  // pairs collapse to a single labeled link vertex.
  struct End {
    int dir;
    int sign;  // +1 outgoing, -1 incoming; loops carry both ends
  };
  std::vector<End> ends;
  for (size_t x = 0; x < l.vertices.size(); ++x) {
    ends.push_back({static_cast<int>(x), +1});
    ends.push_back({static_cast<int>(x), -1});
  }
  FlagComplex link;
  std::map<std::pair<int, int>, int> end_vertex;  // (dir, sign) -> link vertex
  for (const End& e : ends) {
    if (marked.count(e.dir)) {
      end_vertex[{e.dir, e.sign}] =
          link.add_vertex(l.vertices[static_cast<size_t>(e.dir)] + (e.sign > 0 ? "+" : "-"));
    } else {
      // Both ends of the loop collapse onto one link vertex.
      const auto it = end_vertex.find({e.dir, -e.sign});
      if (it != end_vertex.end()) {
        end_vertex[{e.dir, e.sign}] = it->second;
      } else {
        end_vertex[{e.dir, e.sign}] = link.add_vertex(l.vertices[static_cast<size_t>(e.dir)]);
      }
    }
  }
  for (const End& a : ends)
    for (const End& b : ends) {
      if (a.dir >= b.dir) continue;
      if (!l.adjacent(a.dir, b.dir)) continue;  // no square spans these directions
      const int va = end_vertex[{a.dir, a.sign}];
      const int vb = end_vertex[{b.dir, b.sign}];
      link.add_edge(va, vb);
    }
  return link;
}

Presentation graph_product_presentation(const FlagComplex& k,
                                        const std::vector<Presentation>& vertex_groups) {
  k.validate();
  if (vertex_groups.size() != k.vertices.size())
    throw input_error("graph product needs one group per vertex");
  Presentation out;
  std::set<std::string> used;
  auto alloc = [&used](const std::string& want, const std::string& suffix) {
    if (used.insert(want).second) return want;
    std::string name = want + "_" + suffix;
    int c = 2;
    while (!used.insert(name).second) name = want + "_" + suffix + std::to_string(c++);
    return name;
  };
  std::vector<std::vector<int>> ids(k.vertices.size());
  for (size_t x = 0; x < k.vertices.size(); ++x)
    for (const auto& gs : vertex_groups[x].generators)
      ids[x].push_back(
          out.add_generator(GeneratorSymbol::parse(alloc(gs.token(), k.vertices[x]))));
  for (size_t x = 0; x < k.vertices.size(); ++x)
    for (const Word& r : vertex_groups[x].relators) out.add_relator(relabel(r, ids[x]));
  for (const auto& [x, y] : k.edges)
    for (int gx : ids[static_cast<size_t>(x)])
      for (int gy : ids[static_cast<size_t>(y)])
        out.add_relator(commutator(Word{{Letter{gx, +1}}}, Word{{Letter{gy, +1}}}));
  return out;
}

std::string flag_json(const FlagComplex& f) {
  nlohmann::json j;
  j["kind"] = "flag_complex";
  j["vertices"] = f.vertices;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : f.edges)
    j["edges"].push_back({f.vertices[static_cast<size_t>(a)], f.vertices[static_cast<size_t>(b)]});
  return j.dump();
}

FlagComplex flag_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FlagComplex f;
  for (const auto& v : j.at("vertices")) f.add_vertex(v.get<std::string>());
  for (const auto& e : j.at("edges")) {
    const int a = f.index_of(e.at(0).get<std::string>());
    const int b = f.index_of(e.at(1).get<std::string>());
    if (a < 0 || b < 0) throw input_error("flag complex edge over unknown vertex");
    f.add_edge(a, b);
  }
  f.validate();
  return f;
}

}  // namespace gogkit
