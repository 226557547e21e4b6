#include "gogkit/coxeter.hpp"

#include <algorithm>
#include <functional>

#include "gogkit/budget.hpp"
#include "gogkit/errors.hpp"

namespace gogkit {

int RightAngledCoxeterSystem::index_of(const std::string& name) const {
  for (size_t i = 0; i < I.size(); ++i)
    if (I[i] == name) return static_cast<int>(i);
  return -1;
}

void RightAngledCoxeterSystem::validate() const {
  std::set<std::string> names(I.begin(), I.end());
  if (names.size() != I.size()) throw input_error("duplicate generator names");
  for (const auto& [i, j] : commuting) {
    if (i < 0 || j < 0 || static_cast<size_t>(i) >= I.size() ||
        static_cast<size_t>(j) >= I.size())
      throw input_error("commuting pair out of range");
    if (i >= j) throw input_error("commuting pairs must be stored with i < j");
  }
}

void BuildingSpec::validate() const {
  racs.validate();
  if (q.size() != racs.I.size()) throw input_error("parameter count mismatch");
  for (long long qi : q)
    if (qi < 2) throw input_error("building parameters must be >= 2");
}

std::vector<std::vector<int>> spherical_subsets(const RightAngledCoxeterSystem& r,
                                                long long budget) {
  r.validate();
  if (budget <= 0) budget = budgets::cliques();
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // Lexicographic DFS over cliques of the commutation graph.
  std::function<void(int)> extend = [&](int next) {
    if (static_cast<long long>(out.size()) >= budget)
      throw budget_error("spherical subset enumeration exceeded budget");
    out.push_back(current);
    for (int i = next; i < static_cast<int>(r.I.size()); ++i) {
      bool ok = true;
      for (int j : current)
        if (!r.commute(i, j)) ok = false;
      if (!ok) continue;
      current.push_back(i);
      extend(i + 1);
      current.pop_back();
    }
  };
  extend(0);
  return out;
}

FlagComplex nerve(const RightAngledCoxeterSystem& r) {
  r.validate();
  FlagComplex f;
  for (const auto& name : r.I) f.add_vertex(name);
  for (const auto& [i, j] : r.commuting) f.add_edge(i, j);
  return f;
}

Chamber chamber(const RightAngledCoxeterSystem& r) {
  Chamber c;
  c.types = spherical_subsets(r);
  for (size_t a = 0; a < c.types.size(); ++a)
    for (size_t b = 0; b < c.types.size(); ++b) {
      if (a == b || c.types[a].size() >= c.types[b].size()) continue;
      if (std::includes(c.types[b].begin(), c.types[b].end(), c.types[a].begin(),
                        c.types[a].end()))
        c.face_pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return c;
}

namespace {

// Backtracking search for the lexicographically least m-preserving
// bijection with the pinned value, over an arbitrary candidate domain.
// domain/codomain are index lists; the map is built in domain order.
std::optional<std::vector<int>> search_bijection(
    const RightAngledCoxeterSystem& r, const std::vector<long long>& q,
    const std::vector<int>& domain, const std::vector<int>& codomain, int pin_from,
    int pin_to, bool require_q) {
  if (domain.size() != codomain.size()) return std::nullopt;
  std::vector<int> img(domain.size(), -1);
  std::vector<char> used(codomain.size(), 0);

  std::function<bool(size_t)> place = [&](size_t pos) {
    if (pos == domain.size()) return true;
    const int d = domain[pos];
    for (size_t c = 0; c < codomain.size(); ++c) {
      if (used[c]) continue;
      const int t = codomain[c];
      if (d == pin_from && t != pin_to) continue;
      if (d != pin_from && t == pin_to) continue;
      if (require_q && q[static_cast<size_t>(d)] != q[static_cast<size_t>(t)]) continue;
      bool ok = true;
      for (size_t prev = 0; prev < pos && ok; ++prev)
        ok = r.m(domain[prev], d) == r.m(img[prev], t);
      if (!ok) continue;
      img[pos] = t;
      used[c] = 1;
      if (place(pos + 1)) return true;
      img[pos] = -1;
      used[c] = 0;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return img;
}

}  // namespace

std::optional<std::vector<int>> check_T1(const BuildingSpec& spec, int i1, int i2) {
  spec.validate();
  if (spec.racs.m(i1, i2) != 0)
    throw input_error("T1 requires m(i1,i2) = infinity");
  const int n = static_cast<int>(spec.racs.I.size());
  std::vector<int> all(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
  const auto img = search_bijection(spec.racs, spec.q, all, all, i1, i2, false);
  if (!img) return std::nullopt;
  return img;  // domain is 0..n-1 in order, so img is the permutation
}

std::optional<std::map<int, int>> check_T2(const BuildingSpec& spec, int i1, int i2) {
  spec.validate();
  if (spec.racs.m(i1, i2) != 0)
    throw input_error("T2 requires m(i1,i2) = infinity");
  const int n = static_cast<int>(spec.racs.I.size());
  std::vector<int> dom, cod;
  for (int i = 0; i < n; ++i) {
    if (spec.racs.m(i1, i) != 0) dom.push_back(i);
    if (spec.racs.m(i2, i) != 0) cod.push_back(i);
  }
  const auto img = search_bijection(spec.racs, spec.q, dom, cod, i1, i2, true);
  if (!img) return std::nullopt;
  std::map<int, int> h;
  for (size_t k = 0; k < dom.size(); ++k) h[dom[k]] = (*img)[k];
  return h;
}

std::optional<std::vector<int>> t1_witness_extending_t2(const BuildingSpec& spec, int i1,
                                                        int i2) {
  spec.validate();
  if (spec.racs.m(i1, i2) != 0)
    throw input_error("extension search requires m(i1,i2) = infinity");
  const int n = static_cast<int>(spec.racs.I.size());
  // Enumerate T1 witnesses in lexicographic order and accept the first
  // whose restriction preserves the parameters.
  std::vector<int> img(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::optional<std::vector<int>> found;

  std::function<bool(int)> place = [&](int pos) -> bool {
    if (pos == n) {
      for (int i = 0; i < n; ++i) {
        if (spec.racs.m(i1, i) == 0) continue;  // outside the T2 domain
        if (spec.q[static_cast<size_t>(i)] !=
            spec.q[static_cast<size_t>(img[static_cast<size_t>(i)])])
          return false;
      }
      found = img;
      return true;
    }
    for (int t = 0; t < n; ++t) {
      if (used[static_cast<size_t>(t)]) continue;
      if (pos == i1 && t != i2) continue;
      if (pos != i1 && t == i2) continue;
      bool ok = true;
      for (int prev = 0; prev < pos && ok; ++prev)
        ok = spec.racs.m(prev, pos) ==
             spec.racs.m(img[static_cast<size_t>(prev)], t);
      if (!ok) continue;
      img[static_cast<size_t>(pos)] = t;
      used[static_cast<size_t>(t)] = 1;
      if (place(pos + 1)) return true;
      img[static_cast<size_t>(pos)] = -1;
      used[static_cast<size_t>(t)] = 0;
    }
    return false;
  };
  place(0);
  return found;
}

}  // namespace gogkit
