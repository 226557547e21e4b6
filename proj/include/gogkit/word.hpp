// Generator symbols and freely reduced words, the raw material of every
// presentation in the library.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gogkit {

struct GeneratorSymbol {
  std::string base;          // nonempty token: letters, digits, underscore
  std::optional<int> index;  // indexed family member, e.g. x3 -> ("x", 3)

  std::string token() const {
    return index ? base + std::to_string(*index) : base;
  }

  // Splits a trailing run of digits into the index, so "x3" and "v10"
  // become indexed family members while "a" and "t" stay plain.
  static GeneratorSymbol parse(const std::string& tok);

  bool operator==(const GeneratorSymbol& o) const {
    return token() == o.token();
  }
};

struct Letter {
  int gen;   // index into the owning presentation's generator list
  int sign;  // +1 or -1

  auto operator<=>(const Letter&) const = default;
};

// A word is a sequence of signed generator letters. Words handed out by
// this module are always freely reduced; the empty word is the identity.
struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
  bool operator==(const Word& o) const = default;
};

// Cancels adjacent inverse pairs until none remain. Idempotent and
// length-nonincreasing; the result is the unique freely reduced form.
Word free_reduce(const std::vector<Letter>& raw);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);      // freely reduced product
Word power(const Word& w, long long n);          // w^n, reduced
Word commutator(const Word& a, const Word& b);   // a b a^-1 b^-1, reduced

// Conjugates the ends of the word into each other until the first and
// last letters are no longer inverse. A cyclically reduced word is the
// canonical relator form.
Word cyclic_reduce(const Word& w);

// Relabels generator indices through `map` (old index -> new index);
// map entry -1 is an error guard for the caller.
Word relabel(const Word& w, const std::vector<int>& map);

// Replaces every letter by a word (substitution[g] for letter g), used by
// the Tietze elimination pass.
Word substitute(const Word& w, const std::vector<Word>& substitution);

}  // namespace gogkit
