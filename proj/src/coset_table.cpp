#include "gogkit/coset_table.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "gogkit/budget.hpp"
#include "gogkit/errors.hpp"
#include "gogkit/finite_group.hpp"

namespace gogkit {

namespace {

// Column encoding: 2g for generator g, 2g+1 for its inverse.
int col_of(const Letter& l) { return 2 * l.gen + (l.sign > 0 ? 0 : 1); }
int col_inv(int col) { return col ^ 1; }

class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup, long long max_cosets)
      : pres_(p), subgroup_(subgroup), max_cosets_(max_cosets) {
    ncols_ = 2 * static_cast<int>(p.generators.size());
    new_coset();  // coset 0 is the subgroup itself
  }

  CosetTable run() {
    for (const Word& w : subgroup_)
      for (const Letter& l : w.letters)
        if (l.gen < 0 || static_cast<size_t>(l.gen) >= pres_.generators.size())
          throw input_error("subgroup word over unknown generator");

    bool overflow = false;
    try {
      for (const Word& w : subgroup_) scan_and_fill(0, w);
      for (int a = 0; a < static_cast<int>(table_.size()); ++a) {
        if (rep(a) != a) continue;
        for (const Word& r : pres_.relators) {
          scan_and_fill(a, r);
          if (rep(a) != a) break;  // the row died under a coincidence
        }
        if (rep(a) != a) continue;
        for (int x = 0; x < ncols_; ++x)
          if (entry(a, x) < 0) define(a, x);
      }
    } catch (const budget_error&) {
      overflow = true;
    }

    CosetTable out;
    out.ngens = static_cast<int>(pres_.generators.size());
    out.presentation = pres_;
    out.subgroup_words = subgroup_;
    if (overflow) {
      out.status = CosetTable::Status::overflowed;
      out.index = live_;
      compress_into(out);
      return out;
    }
    out.status = CosetTable::Status::complete;
    compress_into(out);
    out.index = static_cast<int>(out.rows.size());
    verify_closed(out);
    return out;
  }

 private:
  int entry(int a, int x) const { return table_[static_cast<size_t>(a)][static_cast<size_t>(x)]; }
  void set_entry(int a, int x, int v) { table_[static_cast<size_t>(a)][static_cast<size_t>(x)] = v; }

  int new_coset() {
    if (live_ >= max_cosets_)
      throw budget_error("live cosets exceeded max_cosets=" + std::to_string(max_cosets_));
    table_.emplace_back(static_cast<size_t>(ncols_), -1);
    p_.push_back(static_cast<int>(table_.size()) - 1);
    ++live_;
    return static_cast<int>(table_.size()) - 1;
  }

  int rep(int a) {
    int r = a;
    while (p_[static_cast<size_t>(r)] != r) r = p_[static_cast<size_t>(r)];
    while (p_[static_cast<size_t>(a)] != r) {
      const int next = p_[static_cast<size_t>(a)];
      p_[static_cast<size_t>(a)] = r;
      a = next;
    }
    return r;
  }

  int define(int a, int x) {
    const int n = new_coset();
    set_entry(a, x, n);
    set_entry(n, col_inv(x), a);
    return n;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // keep the lowest-numbered coset
    p_[static_cast<size_t>(b)] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int y = queue.front();
      queue.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        const int d = entry(y, x);
        if (d < 0) continue;
        set_entry(d, col_inv(x), -1);
        set_entry(y, x, -1);
        const int mu = rep(y);
        const int nu = rep(d);
        if (entry(mu, x) >= 0) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, col_inv(x)) >= 0) {
          merge(mu, entry(nu, col_inv(x)), queue);
        } else {
          set_entry(mu, x, nu);
          set_entry(nu, col_inv(x), mu);
        }
      }
    }
  }

  void scan_and_fill(int a, const Word& w) {
    if (w.empty()) return;
    std::vector<int> cols;
    cols.reserve(w.size());
    for (const Letter& l : w.letters) cols.push_back(col_of(l));
    int f = rep(a), b = rep(a);
    size_t i = 0, r = cols.size();  // scan positions: letters [i, r)
    while (true) {
      while (i < r && entry(f, cols[i]) >= 0) f = entry(f, cols[i++]);
      if (i == r) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (r > i && entry(b, col_inv(cols[r - 1])) >= 0) b = entry(b, col_inv(cols[--r]));
      if (r == i) {
        coincidence(f, b);
        return;
      }
      if (r == i + 1) {
        set_entry(f, cols[i], b);       // deduction closes the scan
        set_entry(b, col_inv(cols[i]), f);
        return;
      }
      f = define(f, cols[i++]);
    }
  }

  void compress_into(CosetTable& out) {
    std::vector<int> newid(table_.size(), -1);
    int k = 0;
    for (int a = 0; a < static_cast<int>(table_.size()); ++a)
      if (rep(a) == a) newid[static_cast<size_t>(a)] = k++;
    out.rows.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(ncols_), -1));
    for (int a = 0; a < static_cast<int>(table_.size()); ++a) {
      if (rep(a) != a) continue;
      for (int x = 0; x < ncols_; ++x) {
        const int e = entry(a, x);
        if (e >= 0)
          out.rows[static_cast<size_t>(newid[static_cast<size_t>(a)])][static_cast<size_t>(x)] =
              newid[static_cast<size_t>(rep(e))];
      }
    }
  }

  void verify_closed(const CosetTable& out) {
    for (const auto& row : out.rows)
      for (int e : row)
        if (e < 0) throw state_error("internal: complete table has undefined entries");
    for (size_t a = 0; a < out.rows.size(); ++a)
      for (const Word& r : pres_.relators)
        if (out.trace(static_cast<int>(a), r) != static_cast<int>(a))
          throw state_error("internal: relator does not close on the completed table");
    for (const Word& w : subgroup_)
      if (out.trace(0, w) != 0)
        throw state_error("internal: subgroup generator does not fix coset 1");
  }

  const Presentation& pres_;
  const std::vector<Word>& subgroup_;
  long long max_cosets_;
  int ncols_ = 0;
  long long live_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> p_;  // union-find over cosets
};

}  // namespace

int CosetTable::trace(int coset, const Word& w) const {
  int c = coset;
  for (const Letter& l : w.letters) {
    c = act(c, l.gen, l.sign);
    if (c < 0) throw state_error("trace through undefined table entry");
  }
  return c;
}

std::vector<int> CosetTable::word_permutation(const Word& w) const {
  std::vector<int> perm(rows.size());
  for (size_t c = 0; c < rows.size(); ++c) perm[c] = trace(static_cast<int>(c), w);
  return perm;
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        long long max_cosets) {
  if (max_cosets <= 0) max_cosets = budgets::max_cosets();
  Enumerator e(p, subgroup, max_cosets);
  return e.run();
}

namespace {

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[static_cast<size_t>(b[i])];
  return c;
}

long long perm_order(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  long long ord = 1;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<size_t>(perm[j]);
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::set<std::vector<int>> perm_closure(const std::vector<std::vector<int>>& gens,
                                        long long budget) {
  const size_t deg = gens.empty() ? 1 : gens[0].size();
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> grp{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    const std::vector<int> x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<int> y = compose(x, g);
      if (grp.insert(y).second) {
        if (static_cast<long long>(grp.size()) > budget)
          throw budget_error("coset action image exceeded closure budget");
        queue.push_back(std::move(y));
      }
    }
  }
  return grp;
}

}  // namespace

QuotientFingerprint coset_action_image(const CosetTable& t, long long budget) {
  if (!t.complete()) throw state_error("coset action image requires a complete table");
  if (budget <= 0) budget = budgets::ball_nodes();

  std::vector<std::vector<int>> gens;
  for (int g = 0; g < t.ngens; ++g) {
    std::vector<int> perm(t.rows.size());
    for (size_t c = 0; c < t.rows.size(); ++c) perm[c] = t.act(static_cast<int>(c), g, +1);
    gens.push_back(std::move(perm));
  }
  const std::set<std::vector<int>> grp = perm_closure(gens, budget);

  QuotientFingerprint fp;
  fp.order = static_cast<long long>(grp.size());
  for (const auto& x : grp) ++fp.element_orders[perm_order(x)];

  // Derived subgroup: normal closure of generator commutators.
  const size_t deg = t.rows.size();
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  auto inv_perm = [&](const std::vector<int>& a) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[static_cast<size_t>(a[i])] = static_cast<int>(i);
    return r;
  };
  std::set<std::vector<int>> derived{id};
  std::deque<std::vector<int>> work;
  auto add = [&](const std::vector<int>& x) {
    if (derived.insert(x).second) work.push_back(x);
  };
  for (const auto& a : gens)
    for (const auto& b : gens)
      add(compose(compose(a, b), compose(inv_perm(a), inv_perm(b))));
  while (!work.empty()) {
    const std::vector<int> x = work.front();
    work.pop_front();
    for (const auto& k : derived) add(compose(x, k));
    for (const auto& g : gens) add(compose(compose(g, x), inv_perm(g)));
  }

  const long long q_order = fp.order.convert_to<long long>() / static_cast<long long>(derived.size());
  // Coset representatives of the derived subgroup.
  auto coset_key = [&](const std::vector<int>& x) {
    std::vector<int> best = compose(x, *derived.begin());
    for (const auto& k : derived) best = std::min(best, compose(x, k));
    return best;
  };
  std::set<std::vector<int>> reps;
  for (const auto& x : grp) reps.insert(coset_key(x));
  const std::vector<int> id_key = coset_key(id);
  auto solutions = [&](long long k) {
    long long cnt = 0;
    for (const auto& r : reps) {
      std::vector<int> x = id;
      for (long long i = 0; i < k; ++i) x = compose(x, r);
      if (coset_key(x) == id_key) ++cnt;
    }
    return cnt;
  };
  fp.abelian.free_rank = 0;
  fp.abelian.torsion = invariant_factors_from_solution_counts(solutions, q_order);
  return fp;
}

WitnessReport verify_torsion_witness(const Presentation& p, const std::vector<Word>& subgroup,
                                     const std::vector<Word>& witnesses, long long max_cosets) {
  const CosetTable t = todd_coxeter(p, subgroup, max_cosets);
  if (!t.complete())
    throw budget_error("witness verification requires a closed enumeration");
  WitnessReport rep;
  for (const Word& w : witnesses) {
    const std::vector<int> perm = t.word_permutation(w);
    bool nontrivial = false;
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] != static_cast<int>(i)) nontrivial = true;
    rep.entries.push_back({word_text(w, p), nontrivial});
    rep.all_nontrivial = rep.all_nontrivial && nontrivial;
  }
  return rep;
}

}  // namespace gogkit
