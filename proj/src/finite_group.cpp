#include "gogkit/finite_group.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>

#include "gogkit/errors.hpp"

namespace gogkit {

namespace {

void check_table(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  if (n == 0) throw input_error("empty multiplication table");
  if (n > kMaxFiniteOrder)
    throw input_error("finite group order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(kMaxFiniteOrder));
  for (const auto& row : t)
    if (static_cast<int>(row.size()) != n) throw input_error("ragged multiplication table");
  std::vector<char> seen(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      const int v = t[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
        throw input_error("table row " + std::to_string(i) + " is not a permutation");
      seen[static_cast<size_t>(v)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      const int v = t[static_cast<size_t>(j)][static_cast<size_t>(i)];
      if (seen[static_cast<size_t>(v)])
        throw input_error("table column " + std::to_string(i) + " is not a permutation");
      seen[static_cast<size_t>(v)] = 1;
    }
  }
}

int find_identity(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = t[static_cast<size_t>(e)][static_cast<size_t>(x)] == x &&
           t[static_cast<size_t>(x)][static_cast<size_t>(e)] == x;
    if (ok) return e;
  }
  throw input_error("multiplication table has no identity");
}

void check_associativity(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  auto mul = [&](int a, int b) { return t[static_cast<size_t>(a)][static_cast<size_t>(b)]; };
  if (n <= 128) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw input_error("multiplication table is not associative");
    return;
  }
  // Deterministic sample for large tables.
  unsigned long long state = 0x9e3779b97f4a7c15ULL;
  auto next = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<int>(state % static_cast<unsigned long long>(n));
  };
  for (int k = 0; k < 200000; ++k) {
    const int a = next(), b = next(), c = next();
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw input_error("multiplication table is not associative");
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::pair<std::string, int>> generators,
                                    std::vector<std::string> element_names) {
  check_table(table);
  FiniteGroup g;
  g.n_ = static_cast<int>(table.size());
  g.table_ = std::move(table);
  g.id_ = find_identity(g.table_);
  check_associativity(g.table_);
  g.inv_.assign(static_cast<size_t>(g.n_), -1);
  for (int a = 0; a < g.n_; ++a) {
    for (int b = 0; b < g.n_; ++b)
      if (g.mul(a, b) == g.id_ && g.mul(b, a) == g.id_) {
        g.inv_[static_cast<size_t>(a)] = b;
        break;
      }
    if (g.inv_[static_cast<size_t>(a)] < 0)
      throw input_error("element " + std::to_string(a) + " has no inverse");
  }
  if (element_names.empty()) {
    for (int i = 0; i < g.n_; ++i) element_names.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(element_names.size()) != g.n_)
    throw input_error("element name list length mismatch");
  g.names_ = std::move(element_names);
  for (const auto& [name, el] : generators)
    if (el < 0 || el >= g.n_) throw input_error("generator '" + name + "' out of range");
  g.gens_ = std::move(generators);
  return g;
}

FiniteGroup FiniteGroup::trivial() {
  return from_table({{0}}, {}, {"1"});
}

FiniteGroup FiniteGroup::cyclic(int q, const std::string& gen_name) {
  if (q < 1) throw input_error("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<size_t>(q), std::vector<int>(static_cast<size_t>(q)));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % q;
  std::vector<std::string> names;
  for (int i = 0; i < q; ++i)
    names.push_back(i == 0 ? "1" : (i == 1 ? gen_name : gen_name + "^" + std::to_string(i)));
  FiniteGroup g = from_table(std::move(t), {{gen_name, q > 1 ? 1 : 0}}, std::move(names));
  Presentation p;
  const int gi = p.add_generator(GeneratorSymbol::parse(gen_name));
  p.add_relator(power(Word{{Letter{gi, +1}}}, q));
  g.declare_presentation(std::move(p));
  return g;
}

FiniteGroup FiniteGroup::symmetric3() {
  // Elements as permutations of {0,1,2} in lexicographic one-line order.
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> base{0, 1, 2};
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  auto compose = [&](int a, int b) {
    std::array<int, 3> c{};
    for (int i = 0; i < 3; ++i)
      c[static_cast<size_t>(i)] =
          perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(i)])];
    for (size_t k = 0; k < perms.size(); ++k)
      if (perms[k] == c) return static_cast<int>(k);
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = compose(a, b);
  // s = (0 1), c = (0 1 2)
  int s = -1, c = -1;
  for (size_t k = 0; k < perms.size(); ++k) {
    if (perms[k] == std::array<int, 3>{1, 0, 2}) s = static_cast<int>(k);
    if (perms[k] == std::array<int, 3>{1, 2, 0}) c = static_cast<int>(k);
  }
  FiniteGroup g = from_table(std::move(t), {{"s", s}, {"c", c}});
  Presentation p;
  const int si = p.add_generator(GeneratorSymbol::parse("s"));
  const int ci = p.add_generator(GeneratorSymbol::parse("c"));
  Word ws{{Letter{si, +1}}}, wc{{Letter{ci, +1}}};
  p.add_relator(power(ws, 2));
  p.add_relator(power(wc, 3));
  p.add_relator(concat(concat(ws, wc), concat(ws, wc)));  // (s c)^2: s c s = c^-1
  g.declare_presentation(std::move(p));
  return g;
}

FiniteGroup FiniteGroup::dihedral4() {
  // <r, f | r^4, f^2, f r f r> of order 8, elements r^i f^j.
  auto enc = [](int i, int j) { return i * 2 + j; };  // i mod 4, j mod 2
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i f^j)(r^k f^l) = r^{i + k*(-1)^j} f^{j+l}
          const int ii = ((i + (j ? -k : k)) % 4 + 4) % 4;
          const int jj = (j + l) % 2;
          t[static_cast<size_t>(enc(i, j))][static_cast<size_t>(enc(k, l))] = enc(ii, jj);
        }
  FiniteGroup g = from_table(std::move(t), {{"r", enc(1, 0)}, {"f", enc(0, 1)}});
  Presentation p;
  const int ri = p.add_generator(GeneratorSymbol::parse("r"));
  const int fi = p.add_generator(GeneratorSymbol::parse("f"));
  Word wr{{Letter{ri, +1}}}, wf{{Letter{fi, +1}}};
  p.add_relator(power(wr, 4));
  p.add_relator(power(wf, 2));
  p.add_relator(concat(concat(wf, wr), concat(wf, wr)));
  g.declare_presentation(std::move(p));
  return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  if (n > kMaxFiniteOrder) throw input_error("direct product exceeds finite-order cap");
  auto enc = [&](int x, int y) { return x * b.order() + y; };
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x1 = 0; x1 < a.order(); ++x1)
    for (int y1 = 0; y1 < b.order(); ++y1)
      for (int x2 = 0; x2 < a.order(); ++x2)
        for (int y2 = 0; y2 < b.order(); ++y2)
          t[static_cast<size_t>(enc(x1, y1))][static_cast<size_t>(enc(x2, y2))] =
              enc(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<std::pair<std::string, int>> gens;
  for (const auto& [name, el] : a.generators()) gens.emplace_back(name, enc(el, b.identity()));
  for (const auto& [name, el] : b.generators()) {
    for (const auto& [na, _] : a.generators())
      if (na == name) throw input_error("direct product generator name clash: '" + name + "'");
    gens.emplace_back(name, enc(a.identity(), el));
  }
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(n));
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < b.order(); ++y)
      names.push_back("(" + a.element_name(x) + "," + b.element_name(y) + ")");
  FiniteGroup g = from_table(std::move(t), std::move(gens), std::move(names));

  // Product presentation: both factors' relators plus cross commutators.
  const Presentation pa = a.presentation();
  const Presentation pb = b.presentation();
  Presentation p;
  std::vector<int> map_a(pa.generators.size()), map_b(pb.generators.size());
  for (size_t i = 0; i < pa.generators.size(); ++i) map_a[i] = p.add_generator(pa.generators[i]);
  for (size_t i = 0; i < pb.generators.size(); ++i) map_b[i] = p.add_generator(pb.generators[i]);
  for (const Word& r : pa.relators) p.add_relator(relabel(r, map_a));
  for (const Word& r : pb.relators) p.add_relator(relabel(r, map_b));
  for (int ga : map_a)
    for (int gb : map_b)
      p.add_relator(commutator(Word{{Letter{ga, +1}}}, Word{{Letter{gb, +1}}}));
  g.declare_presentation(std::move(p));
  return g;
}

FiniteGroup FiniteGroup::elementary_abelian_2(int r, const std::string& prefix) {
  if (r < 0 || r > 12) throw input_error("elementary abelian rank out of range");
  const int n = 1 << r;
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = a ^ b;
  std::vector<std::pair<std::string, int>> gens;
  for (int i = 0; i < r; ++i) gens.emplace_back(prefix + std::to_string(i), 1 << i);
  FiniteGroup g = from_table(std::move(t), std::move(gens));
  Presentation p;
  std::vector<int> gi;
  for (int i = 0; i < r; ++i)
    gi.push_back(p.add_generator(GeneratorSymbol::parse(prefix + std::to_string(i))));
  for (int i = 0; i < r; ++i) p.add_relator(power(Word{{Letter{gi[static_cast<size_t>(i)], +1}}}, 2));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      p.add_relator(commutator(Word{{Letter{gi[static_cast<size_t>(i)], +1}}},
                               Word{{Letter{gi[static_cast<size_t>(j)], +1}}}));
  g.declare_presentation(std::move(p));
  return g;
}

int FiniteGroup::element_order(int a) const {
  int x = a, ord = 1;
  while (x != id_) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::evaluate(const Word& w, const Presentation& ctx) const {
  std::vector<int> images(ctx.generators.size(), -1);
  for (size_t i = 0; i < ctx.generators.size(); ++i) {
    const std::string tok = ctx.generators[i].token();
    for (const auto& [name, el] : gens_)
      if (name == tok) images[i] = el;
  }
  for (const Letter& l : w.letters)
    if (images[static_cast<size_t>(l.gen)] < 0)
      throw input_error("word uses generator '" +
                        ctx.generators[static_cast<size_t>(l.gen)].token() +
                        "' with no image in the finite group");
  return evaluate_with_images(w, images);
}

int FiniteGroup::evaluate_with_images(const Word& w, const std::vector<int>& images) const {
  int x = id_;
  for (const Letter& l : w.letters) {
    const int g = images[static_cast<size_t>(l.gen)];
    x = mul(x, l.sign > 0 ? g : inv(g));
  }
  return x;
}

std::vector<int> FiniteGroup::subgroup_closure(std::vector<int> seed) const {
  std::set<int> h{id_};
  for (int s : seed) {
    h.insert(s);
    h.insert(inv(s));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(h.begin(), h.end());
    for (int a : cur)
      for (int b : cur)
        if (h.insert(mul(a, b)).second) grew = true;
  }
  return {h.begin(), h.end()};
}

int FiniteGroup::min_coset_rep(int x, const std::vector<int>& subgroup_sorted) const {
  int best = n_;
  for (int h : subgroup_sorted) best = std::min(best, mul(x, h));
  return best;
}

std::vector<int> FiniteGroup::left_coset_reps(const std::vector<int>& subgroup_sorted) const {
  std::vector<char> seen(static_cast<size_t>(n_), 0);
  std::vector<int> reps;
  for (int x = 0; x < n_; ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    reps.push_back(x);
    for (int h : subgroup_sorted) seen[static_cast<size_t>(mul(x, h))] = 1;
  }
  return reps;
}

int FiniteGroup::subgroup_index(const std::vector<int>& subgroup_sorted) const {
  return n_ / static_cast<int>(subgroup_sorted.size());
}

std::map<long long, long long> FiniteGroup::element_order_multiset() const {
  std::map<long long, long long> m;
  for (int a = 0; a < n_; ++a) ++m[element_order(a)];
  return m;
}

std::vector<Int> invariant_factors_from_solution_counts(
    const std::function<long long(long long)>& solutions, long long group_order) {
  std::vector<long long> primes;
  {
    long long rest = group_order;
    for (long long p = 2; p * p <= rest; ++p)
      if (rest % p == 0) {
        primes.push_back(p);
        while (rest % p == 0) rest /= p;
      }
    if (rest > 1) primes.push_back(rest);
  }
  // Per prime p the partition of p-exponents is read off from the counts
  // of solutions of x^{p^j} = 1: the ratio of consecutive counts is
  // p^{#parts >= j}.
  std::vector<std::pair<long long, std::vector<long long>>> primed;
  for (long long p : primes) {
    std::vector<long long> conj;  // conj[j-1] = #{i : lambda_i >= j}
    long long prev = 1, pj = p;
    while (pj <= group_order) {
      const long long cnt = solutions(pj);
      long long m = 0, q = cnt / prev;
      while (q > 1) {
        q /= p;
        ++m;
      }
      if (m == 0) break;
      conj.push_back(m);
      prev = cnt;
      pj *= p;
    }
    if (conj.empty()) continue;
    std::vector<long long> lambda;  // descending exponents
    for (long long i = 1; i <= conj[0]; ++i) {
      long long cnt = 0;
      for (long long c : conj)
        if (c >= i) ++cnt;
      lambda.push_back(cnt);
    }
    primed.emplace_back(p, std::move(lambda));
  }
  size_t depth = 0;
  for (const auto& [p, l] : primed) depth = std::max(depth, l.size());
  std::vector<Int> factors;  // index 0 pairs the largest exponents
  for (size_t k = 0; k < depth; ++k) {
    Int d = 1;
    for (const auto& [p, l] : primed)
      if (k < l.size()) d *= int_pow(Int(p), Int(l[k]));
    if (d > 1) factors.push_back(d);
  }
  std::sort(factors.begin(), factors.end());  // ascending divisor chain
  return factors;
}

AbelianInvariants FiniteGroup::abelian_invariants() const {
  // Derived subgroup: normal closure of all pairwise commutators.
  std::set<int> derived;
  {
    std::vector<int> seeds;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) {
        const int c = mul(mul(a, b), mul(inv(a), inv(b)));
        if (c != id_) seeds.push_back(c);
      }
    const std::vector<int> k = subgroup_closure(seeds);
    derived.insert(k.begin(), k.end());
  }
  const std::vector<int> ksorted(derived.begin(), derived.end());
  const long long q_order = n_ / static_cast<long long>(ksorted.size());
  const std::vector<int> reps = left_coset_reps(ksorted);
  auto rep_of = [&](int x) { return min_coset_rep(x, ksorted); };
  auto solutions = [&](long long k) {
    long long cnt = 0;
    for (int r : reps) {
      int x = id_;
      for (long long i = 0; i < k; ++i) x = mul(x, r);
      if (rep_of(x) == rep_of(id_)) ++cnt;
    }
    return cnt;
  };
  AbelianInvariants inv;
  inv.free_rank = 0;
  inv.torsion = invariant_factors_from_solution_counts(solutions, q_order);
  return inv;
}

bool FiniteGroup::generators_generate() const {
  std::vector<int> seed;
  for (const auto& [_, el] : gens_) seed.push_back(el);
  return static_cast<int>(subgroup_closure(seed).size()) == n_;
}

Word FiniteGroup::element_word(int elem) const {
  if (elem == id_) return Word{};
  std::vector<int> parent(static_cast<size_t>(n_), -1);
  std::vector<int> via_gen(static_cast<size_t>(n_), -1);
  std::vector<int> via_sign(static_cast<size_t>(n_), 0);
  std::vector<int> queue{id_};
  parent[static_cast<size_t>(id_)] = id_;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int x = queue[qi];
    for (size_t g = 0; g < gens_.size(); ++g) {
      for (int sign : {+1, -1}) {
        const int img = gens_[g].second;
        const int y = mul(x, sign > 0 ? img : inv(img));
        if (parent[static_cast<size_t>(y)] >= 0) continue;
        parent[static_cast<size_t>(y)] = x;
        via_gen[static_cast<size_t>(y)] = static_cast<int>(g);
        via_sign[static_cast<size_t>(y)] = sign;
        if (y == elem) {
          std::vector<Letter> letters;
          int c = y;
          while (c != id_) {
            letters.push_back(Letter{via_gen[static_cast<size_t>(c)],
                                     via_sign[static_cast<size_t>(c)]});
            c = parent[static_cast<size_t>(c)];
          }
          std::reverse(letters.begin(), letters.end());
          return free_reduce(letters);
        }
        queue.push_back(y);
      }
    }
  }
  throw input_error("element not generated by the named generators");
}

Presentation FiniteGroup::presentation() const {
  if (declared_) return *declared_;
  if (!generators_generate())
    throw input_error("named generators do not generate the finite group");
  Presentation p;
  std::vector<int> gen_ids;
  std::vector<int> gen_elems;
  for (const auto& [name, el] : gens_) {
    gen_ids.push_back(p.add_generator(GeneratorSymbol::parse(name)));
    gen_elems.push_back(el);
  }
  // Spanning tree of the Cayley graph; each chord closes into a relator.
  std::vector<Word> path(static_cast<size_t>(n_));
  std::vector<char> visited(static_cast<size_t>(n_), 0);
  std::vector<int> queue{id_};
  visited[static_cast<size_t>(id_)] = 1;
  std::vector<std::pair<int, size_t>> chords;  // (element, generator idx)
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    const int x = queue[qi];
    for (size_t g = 0; g < gen_elems.size(); ++g) {
      const int y = mul(x, gen_elems[g]);
      if (!visited[static_cast<size_t>(y)]) {
        visited[static_cast<size_t>(y)] = 1;
        path[static_cast<size_t>(y)] =
            concat(path[static_cast<size_t>(x)], Word{{Letter{gen_ids[g], +1}}});
        queue.push_back(y);
      } else {
        chords.emplace_back(x, g);
      }
    }
  }
  std::set<std::vector<Letter>> seen;
  for (const auto& [x, g] : chords) {
    const int y = mul(x, gen_elems[g]);
    const Word rel = concat(concat(path[static_cast<size_t>(x)], Word{{Letter{gen_ids[g], +1}}}),
                            inverse(path[static_cast<size_t>(y)]));
    const Word cr = cyclic_reduce(rel);
    if (cr.empty()) continue;
    if (seen.insert(cr.letters).second) p.relators.push_back(cr);
  }
  return p;
}

}  // namespace gogkit
