// Chamber system of a right-angled building, realized group-theoretically:
// chambers are elements of the graph product of cyclic groups Z_{q_i} over
// the nerve's 1-skeleton, in shortlex-least syllable normal form, and
// i-adjacency is right multiplication by a nontrivial i-syllable.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gogkit/coxeter.hpp"

namespace gogkit {

struct Syllable {
  int gen = 0;        // generator index in I
  long long exp = 0;  // 1 .. q_gen - 1

  auto operator<=>(const Syllable&) const = default;
};

using GPWord = std::vector<Syllable>;

// Canonical (lexicographically least reachable) normal form: adjacent
// commuting syllables may be swapped, same-generator syllables separated
// by commuting ones combine mod q.
GPWord gp_normal_form(const BuildingSpec& spec, GPWord w);
GPWord gp_mult(const BuildingSpec& spec, const GPWord& w, const Syllable& s);
std::string gp_str(const BuildingSpec& spec, const GPWord& w);

struct ChamberBall {
  std::vector<GPWord> chambers;  // canonical forms; index 0 is the base
  std::vector<std::string> labels;
  struct Adjacency {
    int from = 0;
    int to = 0;
    int type = 0;  // generator i
  };
  std::vector<Adjacency> adjacencies;  // from < to, one per unordered pair

  struct Residue {
    int type = 0;
    std::vector<int> chambers;  // members present in the ball
    bool complete = false;      // all q_i members present
  };
  std::vector<Residue> residues;
  int radius = 0;
};

// Ball of the chamber graph to the given gallery radius, with a residue
// audit: every complete i-residue has exactly q_i chambers.
ChamberBall chamber_graph_ball(const BuildingSpec& spec, int radius, long long budget = 0);

std::string dot_chamber_ball(const ChamberBall& ball, const BuildingSpec& spec);

}  // namespace gogkit
