// Presentation cleanup: generator elimination and relator deduplication.
// Used to reduce the raw fundamental-group output of a complex of groups
// (which duplicates local generators across cells) before comparing or
// printing. Every step is a Tietze transformation, so the group and all
// its fingerprints are unchanged.
#pragma once

#include <set>

#include "gogkit/presentation.hpp"

namespace gogkit {

struct TietzeOptions {
  // Generators occurring exactly once in some relator are eliminated by
  // solving that relator, shortest defining word first.
  bool eliminate = true;
  size_t max_total_length = 1'000'000;  // stop growing past this
  // Names treated as stable letters: a letter may be eliminated only
  // through relators made of letters alone, and other generators only
  // through letter-free relators. Keeps the conjugation relations of a
  // fundamental-group presentation intact while the duplicated local
  // copies collapse.
  std::set<std::string> letters;
  // Names to keep when possible: these are eliminated only when no other
  // candidate remains.
  std::set<std::string> preferred_keep;
};

Presentation simplify_presentation(Presentation p, const TietzeOptions& opts = {});

// Deterministic canonical relator key: minimum over cyclic rotations of
// the relator and of its inverse. Used for deduplication.
std::vector<Letter> relator_key(const Word& w);

}  // namespace gogkit
