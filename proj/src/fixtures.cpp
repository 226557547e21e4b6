#include "gogkit/fixtures.hpp"

#include <random>

namespace gogkit {

namespace {

// Order of some element of maximal order dividing d, or 1.
int pick_element_of_order(const FiniteGroup& g, int d) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == d) return x;
  return -1;
}

}  // namespace

GraphOfGroups random_finite_gog(unsigned seed, int max_pairs) {
  std::mt19937 rng(seed);
  GraphOfGroups g;

  const int nv = 1 + static_cast<int>(rng() % 3);
  for (int v = 0; v < nv; ++v) g.graph.add_vertex("v" + std::to_string(v));
  for (int v = 0; v < nv; ++v) {
    const int order = 2 + static_cast<int>(rng() % 7);  // Z_2 .. Z_8
    g.vertex_groups.push_back(
        LocalGroup::of(FiniteGroup::cyclic(order, "g" + std::to_string(v))));
  }

  // Random spanning tree then up to max_pairs total edge pairs.
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < nv; ++v) pairs.emplace_back(static_cast<int>(rng() % v), v);
  while (static_cast<int>(pairs.size()) < max_pairs && (rng() % 2) == 0)
    pairs.emplace_back(static_cast<int>(rng() % nv), static_cast<int>(rng() % nv));
  int ei = 0;
  for (const auto& [u, v] : pairs) {
    g.graph.add_edge_pair(u, v, "e" + std::to_string(ei++));
    // Edge group: a cyclic group embedding in both endpoints (possibly
    // trivial).
    const FiniteGroup& gu = g.vertex_groups[static_cast<size_t>(u)].table();
    const FiniteGroup& gv = g.vertex_groups[static_cast<size_t>(v)].table();
    std::vector<int> candidates{1};
    for (int d = 2; d <= 8; ++d)
      if (pick_element_of_order(gu, d) >= 0 && pick_element_of_order(gv, d) >= 0)
        candidates.push_back(d);
    const int d = candidates[rng() % candidates.size()];
    GraphOfGroups::EdgeMap fwd, bwd;
    if (d > 1) {
      g.edge_groups.push_back(
          LocalGroup::of(FiniteGroup::cyclic(d, "h" + std::to_string(ei - 1))));
      const int xu = pick_element_of_order(gu, d);
      const int xv = pick_element_of_order(gv, d);
      // Image words g^k in the endpoint generators.
      auto word_for = [&](const FiniteGroup& grp, const LocalGroup& lg, int target) {
        const Presentation p = lg.presentation();
        const int gen = grp.generators()[0].second;
        int x = grp.identity();
        int k = 0;
        while (x != target) {
          x = grp.mul(x, gen);
          ++k;
        }
        return power(Word{{Letter{0, +1}}}, k);
        (void)p;
      };
      fwd.images = {word_for(gu, g.vertex_groups[static_cast<size_t>(u)], xu)};
      bwd.images = {word_for(gv, g.vertex_groups[static_cast<size_t>(v)], xv)};
    } else {
      g.edge_groups.push_back(LocalGroup::trivial());
    }
    g.edge_maps.push_back(fwd);
    g.edge_maps.push_back(bwd);
  }
  return g;
}

}  // namespace gogkit
