#include "gogkit/homcount.hpp"

#include <algorithm>
#include <sstream>

#include "gogkit/budget.hpp"
#include "gogkit/errors.hpp"

namespace gogkit {

Int count_homs(const Presentation& p, const FiniteGroup& target, long long budget) {
  if (budget <= 0) budget = budgets::hom_tuples();
  const size_t ng = p.generators.size();
  const int n = target.order();

  // Candidate-space guard before walking anything.
  Int space = int_pow(Int(n), Int(ng));
  if (space > Int(budget))
    throw budget_error("hom enumeration space " + space.str() + " exceeds budget " +
                       std::to_string(budget));

  // Order generators so relators close as early as possible: repeatedly
  // pick the generator that completes the most unassigned relators.
  std::vector<size_t> order;
  {
    std::vector<char> assigned(ng, 0);
    std::vector<char> used_rel(p.relators.size(), 0);
    for (size_t step = 0; step < ng; ++step) {
      size_t best = ng;
      long long best_score = -1;
      for (size_t g = 0; g < ng; ++g) {
        if (assigned[g]) continue;
        long long score = 0;
        for (size_t r = 0; r < p.relators.size(); ++r) {
          if (used_rel[r]) continue;
          bool closes = true;
          bool uses = false;
          for (const Letter& l : p.relators[r].letters) {
            if (static_cast<size_t>(l.gen) == g) uses = true;
            if (!assigned[static_cast<size_t>(l.gen)] && static_cast<size_t>(l.gen) != g)
              closes = false;
          }
          if (uses && closes) ++score;
        }
        if (score > best_score) {
          best_score = score;
          best = g;
        }
      }
      assigned[best] = 1;
      order.push_back(best);
      for (size_t r = 0; r < p.relators.size(); ++r) {
        bool closed = true;
        for (const Letter& l : p.relators[r].letters)
          if (!assigned[static_cast<size_t>(l.gen)]) closed = false;
        if (closed) used_rel[r] = 1;
      }
    }
  }
  std::vector<size_t> position(ng);  // generator -> step when assigned
  for (size_t s = 0; s < ng; ++s) position[order[s]] = s;

  // relators_at[s]: relators whose support is fully assigned at step s.
  std::vector<std::vector<const Word*>> relators_at(ng + 1);
  for (const Word& r : p.relators) {
    size_t last = 0;
    for (const Letter& l : r.letters)
      last = std::max(last, position[static_cast<size_t>(l.gen)] + 1);
    relators_at[last].push_back(&r);
  }
  // Empty-support relators are impossible after reduction, but stay safe.
  for (const Word* r : relators_at[0])
    if (!r->empty()) return 0;

  std::vector<int> images(ng, -1);
  long long visited = 0;
  Int count = 0;

  std::function<void(size_t)> walk = [&](size_t step) {
    if (++visited > budget)
      throw budget_error("hom enumeration exceeded budget " + std::to_string(budget));
    if (step == ng) {
      ++count;
      return;
    }
    const size_t g = order[step];
    for (int img = 0; img < n; ++img) {
      images[g] = img;
      bool ok = true;
      for (const Word* r : relators_at[step + 1])
        if (target.evaluate_with_images(*r, images) != target.identity()) {
          ok = false;
          break;
        }
      if (ok) walk(step + 1);
    }
    images[g] = -1;
  };
  walk(0);
  return count;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << abelian.str();
  for (const auto& [name, c] : hom_counts) os << " #Hom(-," << name << ")=" << c.str();
  return os.str();
}

FiniteGroup fingerprint_target(const std::string& name) {
  if (name == "Z2") return FiniteGroup::cyclic(2, "u");
  if (name == "Z3") return FiniteGroup::cyclic(3, "u");
  if (name == "Z4") return FiniteGroup::cyclic(4, "u");
  if (name == "S3") return FiniteGroup::symmetric3();
  throw input_error("unknown fingerprint target '" + name + "'");
}

Fingerprint fingerprint(const Presentation& p, const std::vector<std::string>& targets,
                        long long budget) {
  Fingerprint fp;
  fp.abelian = abelianization(p);
  for (const std::string& t : targets)
    fp.hom_counts.emplace_back(t, count_homs(p, fingerprint_target(t), budget));
  return fp;
}

}  // namespace gogkit
