// Finitely presented groups: generator lists plus freely and cyclically
// reduced relator words, with the text grammar and JSON codecs.
//
// Text grammar:   < a, b, t | [a,b], t a^2 b^-1 t^-1 (a^2 b)^-1, u = v >
//   - generators are tokens (letter/underscore followed by letters,
//     digits, underscores), separated by commas
//   - a relator is a whitespace-separated product of terms; a term is a
//     generator, a parenthesised word, or a commutator [u,v], optionally
//     raised to an integer power with ^
//   - an equation u = v is stored as the relator u v^-1
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gogkit/word.hpp"

namespace gogkit {

struct Presentation {
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators;  // freely and cyclically reduced

  int gen_index(const std::string& token) const;  // -1 when absent
  int add_generator(const GeneratorSymbol& s);    // enforces uniqueness
  void add_relator(const Word& w);                // reduces, drops empty

  size_t generator_count() const { return generators.size(); }
  size_t relator_count() const { return relators.size(); }
};

// Literal generator and relator counts, as a pair.
inline std::pair<size_t, size_t> tietze_counts(const Presentation& p) {
  return {p.generator_count(), p.relator_count()};
}

Presentation parse_presentation(const std::string& text);
std::string presentation_text(const Presentation& p);

// Words in isolation still need a generator context for name lookup.
Word parse_word(const std::string& text, const Presentation& context);
std::string word_text(const Word& w, const Presentation& context);

std::string presentation_json(const Presentation& p);
Presentation presentation_from_json(const std::string& json_text);

}  // namespace gogkit
