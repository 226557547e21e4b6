#include "gogkit/tietze.hpp"

#include <algorithm>
#include <set>

namespace gogkit {

std::vector<Letter> relator_key(const Word& w) {
  const Word base = cyclic_reduce(w);
  std::vector<Letter> best;
  auto consider = [&](const Word& v) {
    const size_t n = v.size();
    for (size_t r = 0; r < n; ++r) {
      std::vector<Letter> rot;
      rot.reserve(n);
      for (size_t i = 0; i < n; ++i) rot.push_back(v.letters[(r + i) % n]);
      auto less = [](const Letter& a, const Letter& b) {
        return a.gen != b.gen ? a.gen < b.gen : a.sign > b.sign;
      };
      if (best.empty() ||
          std::lexicographical_compare(rot.begin(), rot.end(), best.begin(), best.end(), less))
        best = std::move(rot);
    }
  };
  if (base.empty()) return {};
  consider(base);
  consider(inverse(base));
  return best;
}

namespace {

void dedupe(Presentation& p) {
  std::set<std::vector<Letter>> seen;
  std::vector<Word> kept;
  for (const Word& r : p.relators) {
    const Word cr = cyclic_reduce(r);
    if (cr.empty()) continue;
    if (seen.insert(relator_key(cr)).second) kept.push_back(cr);
  }
  p.relators = std::move(kept);
}

// Rotate the relator so the unique occurrence of `gen` is first and
// positively signed; the rest (inverted) is the defining word.
Word defining_word(const Word& relator, int gen) {
  const size_t n = relator.size();
  size_t pos = n;
  for (size_t i = 0; i < n; ++i)
    if (relator.letters[i].gen == gen) pos = i;
  std::vector<Letter> rot;
  for (size_t i = 0; i < n; ++i) rot.push_back(relator.letters[(pos + i) % n]);
  Word rest;
  rest.letters.assign(rot.begin() + 1, rot.end());
  // rot = g^s * rest = 1  =>  g^s = rest^-1  =>  g = rest^-1 (s=+1) or rest (s=-1)
  return rot[0].sign > 0 ? inverse(rest) : rest;
}

}  // namespace

Presentation simplify_presentation(Presentation p, const TietzeOptions& opts) {
  dedupe(p);
  if (!opts.eliminate) return p;

  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<char> is_letter(p.generators.size(), 0);
    std::vector<char> keep(p.generators.size(), 0);
    for (size_t g = 0; g < p.generators.size(); ++g) {
      if (opts.letters.count(p.generators[g].token())) is_letter[g] = 1;
      if (opts.preferred_keep.count(p.generators[g].token())) keep[g] = 1;
    }
    // Find the (relator, generator-with-single-occurrence) pair with the
    // shortest relator, preferring non-kept generators; ties by generator
    // index then relator index.
    size_t best_rel = p.relators.size();
    int best_gen = -1;
    int best_tier = 2;
    for (size_t r = 0; r < p.relators.size(); ++r) {
      std::vector<int> occ(p.generators.size(), 0);
      bool has_letter = false, all_letters = true;
      for (const Letter& l : p.relators[r].letters) {
        ++occ[static_cast<size_t>(l.gen)];
        if (is_letter[static_cast<size_t>(l.gen)]) has_letter = true;
        else all_letters = false;
      }
      for (size_t g = 0; g < p.generators.size(); ++g) {
        if (occ[g] != 1) continue;
        const bool allowed = is_letter[g] ? all_letters : !has_letter;
        if (!allowed) continue;
        const int tier = keep[g] ? 1 : 0;
        const bool better =
            best_gen < 0 || tier < best_tier ||
            (tier == best_tier &&
             (p.relators[r].size() < p.relators[best_rel].size() ||
              (p.relators[r].size() == p.relators[best_rel].size() &&
               static_cast<int>(g) < best_gen)));
        if (better) {
          best_rel = r;
          best_gen = static_cast<int>(g);
          best_tier = tier;
        }
        if (tier == 0) break;  // a non-kept candidate in this relator suffices
      }
    }
    if (best_gen < 0) break;

    const Word def = defining_word(p.relators[best_rel], best_gen);
    // Substitution table: identity on everything else.
    std::vector<Word> subst(p.generators.size());
    for (size_t g = 0; g < p.generators.size(); ++g) {
      if (static_cast<int>(g) == best_gen) {
        subst[g] = def;
      } else {
        subst[g] = Word{{Letter{static_cast<int>(g), +1}}};
      }
    }
    size_t total = 0;
    std::vector<Word> next;
    for (size_t r = 0; r < p.relators.size(); ++r) {
      if (r == best_rel) continue;
      Word w = cyclic_reduce(substitute(p.relators[r], subst));
      total += w.size();
      if (!w.empty()) next.push_back(std::move(w));
    }
    if (total > opts.max_total_length) break;

    // Drop the generator and renumber.
    std::vector<int> map(p.generators.size());
    {
      int k = 0;
      for (size_t g = 0; g < p.generators.size(); ++g)
        map[g] = static_cast<int>(g) == best_gen ? -1 : k++;
    }
    Presentation q;
    for (size_t g = 0; g < p.generators.size(); ++g)
      if (map[g] >= 0) q.generators.push_back(p.generators[g]);
    for (const Word& w : next) q.add_relator(relabel(w, map));
    p = std::move(q);
    dedupe(p);
    progress = true;
  }
  return p;
}

}  // namespace gogkit
