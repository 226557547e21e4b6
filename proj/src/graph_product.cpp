#include "gogkit/graph_product.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "gogkit/budget.hpp"
#include "gogkit/errors.hpp"

namespace gogkit {

namespace {

// Left-greedy lexicographic normal form for a trace word whose syllables
// are already combined: repeatedly move the least front-movable syllable
// to the output. A syllable can move to the front when every earlier
// syllable commutes with it (and has a different generator).
GPWord lex_order(const RightAngledCoxeterSystem& r, GPWord w) {
  GPWord out;
  while (!w.empty()) {
    size_t best = w.size();
    for (size_t p = 0; p < w.size(); ++p) {
      bool movable = true;
      for (size_t q = 0; q < p && movable; ++q)
        movable = r.commute(w[q].gen, w[p].gen);
      if (!movable) continue;
      if (best == w.size() || w[p] < w[best]) best = p;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + static_cast<long>(best));
  }
  return out;
}

}  // namespace

GPWord gp_mult(const BuildingSpec& spec, const GPWord& w, const Syllable& s) {
  if (s.gen < 0 || static_cast<size_t>(s.gen) >= spec.racs.I.size())
    throw input_error("syllable generator out of range");
  const long long q = spec.q[static_cast<size_t>(s.gen)];
  const long long e = ((s.exp % q) + q) % q;
  if (e == 0) return w;
  GPWord out = w;
  // Scan right to left for a combinable same-generator syllable; stop at
  // the first non-commuting blocker.
  long long insert_at = static_cast<long long>(out.size());
  for (long long p = static_cast<long long>(out.size()) - 1; p >= 0; --p) {
    const Syllable& t = out[static_cast<size_t>(p)];
    if (t.gen == s.gen) {
      const long long combined = (t.exp + e) % q;
      if (combined == 0) {
        out.erase(out.begin() + static_cast<long>(p));
      } else {
        out[static_cast<size_t>(p)].exp = combined;
      }
      return lex_order(spec.racs, std::move(out));
    }
    if (!spec.racs.commute(t.gen, s.gen)) {
      insert_at = p + 1;
      break;
    }
  }
  out.insert(out.begin() + static_cast<long>(insert_at), Syllable{s.gen, e});
  return lex_order(spec.racs, std::move(out));
}

GPWord gp_normal_form(const BuildingSpec& spec, GPWord w) {
  GPWord out;
  for (const Syllable& s : w) out = gp_mult(spec, out, s);
  return out;
}

std::string gp_str(const BuildingSpec& spec, const GPWord& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ".";
    os << spec.racs.I[static_cast<size_t>(w[i].gen)];
    if (w[i].exp != 1) os << "^" << w[i].exp;
  }
  return os.str();
}

ChamberBall chamber_graph_ball(const BuildingSpec& spec, int radius, long long budget) {
  spec.validate();
  if (radius < 0) throw input_error("radius must be nonnegative");
  if (budget <= 0) budget = budgets::ball_nodes();

  ChamberBall ball;
  ball.radius = radius;
  std::map<GPWord, int> ids;
  std::vector<int> depth;
  auto intern = [&](const GPWord& w, int d) {
    const auto it = ids.find(w);
    if (it != ids.end()) return it->second;
    if (static_cast<long long>(ball.chambers.size()) >= budget)
      throw budget_error("chamber ball exceeded node budget");
    const int id = static_cast<int>(ball.chambers.size());
    ids[w] = id;
    ball.chambers.push_back(w);
    ball.labels.push_back(gp_str(spec, w));
    depth.push_back(d);
    return id;
  };

  intern({}, 0);
  for (size_t n = 0; n < ball.chambers.size(); ++n) {
    if (depth[n] >= radius) continue;
    const GPWord cur = ball.chambers[n];
    for (int i = 0; i < static_cast<int>(spec.racs.I.size()); ++i)
      for (long long e = 1; e < spec.q[static_cast<size_t>(i)]; ++e)
        intern(gp_mult(spec, cur, Syllable{i, e}), depth[n] + 1);
  }

  // Adjacencies and residues within the ball.
  std::set<std::pair<int, std::pair<int, int>>> adj_seen;  // (type, (a,b))
  std::map<std::pair<int, GPWord>, std::vector<int>> residues;  // (type, panel key)
  for (size_t n = 0; n < ball.chambers.size(); ++n) {
    for (int i = 0; i < static_cast<int>(spec.racs.I.size()); ++i) {
      // Panel key: the least member of the i-residue of this chamber.
      GPWord least = ball.chambers[n];
      for (long long e = 1; e < spec.q[static_cast<size_t>(i)]; ++e)
        least = std::min(least, gp_mult(spec, ball.chambers[n], Syllable{i, e}));
      residues[{i, least}].push_back(static_cast<int>(n));
      for (long long e = 1; e < spec.q[static_cast<size_t>(i)]; ++e) {
        const GPWord other = gp_mult(spec, ball.chambers[n], Syllable{i, e});
        const auto it = ids.find(other);
        if (it == ids.end()) continue;
        const int a = std::min(static_cast<int>(n), it->second);
        const int b = std::max(static_cast<int>(n), it->second);
        if (a == b) throw state_error("internal: i-adjacency fixed a chamber");
        if (adj_seen.insert({i, {a, b}}).second)
          ball.adjacencies.push_back({a, b, i});
      }
    }
  }
  for (auto& [key, members] : residues) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    ChamberBall::Residue res;
    res.type = key.first;
    res.chambers = members;
    res.complete =
        static_cast<long long>(members.size()) == spec.q[static_cast<size_t>(key.first)];
    if (static_cast<long long>(members.size()) > spec.q[static_cast<size_t>(key.first)])
      throw state_error("internal: residue exceeds its parameter");
    ball.residues.push_back(std::move(res));
  }
  return ball;
}

std::string dot_chamber_ball(const ChamberBall& ball, const BuildingSpec& spec) {
  static const char* palette[] = {"red",    "blue",  "green",  "orange",
                                  "purple", "brown", "cyan",   "magenta"};
  std::ostringstream os;
  os << "graph chambers {\n";
  for (size_t n = 0; n < ball.chambers.size(); ++n)
    os << "  c" << n << " [label=\"" << ball.labels[n] << "\"];\n";
  for (const auto& a : ball.adjacencies)
    os << "  c" << a.from << " -- c" << a.to << " [color=" << palette[a.type % 8]
       << ", label=\"" << spec.racs.I[static_cast<size_t>(a.type)] << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace gogkit
