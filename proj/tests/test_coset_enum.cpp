#include <doctest.h>

#include <algorithm>
#include <random>

#include "gogkit/coset_table.hpp"
#include "gogkit/errors.hpp"
#include "gogkit/presentation.hpp"

using namespace gogkit;

namespace {

std::vector<Word> parse_words(const std::vector<std::string>& texts, const Presentation& ctx) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(parse_word(t, ctx));
  return out;
}

Presentation lambda22() {
  return parse_presentation(
      "< a, b, x3, x4, x5, t | x3^2, x4^2, x5^2, [a,b], [a,x3], [a,x4], [a,x5],"
      " [b,x3], [b,x4], [b,x5], [x3,x4],"
      " t a^2 b^-1 t^-1 = a^2 b, t a b^2 t^-1 = a^-1 b^2, t x3 t^-1 = x4, [t,x5] >");
}

std::vector<std::string> delta_words() {
  return {"a",         "b",           "x3 t x4 t^-1",    "x3 x4 t^-2",
          "(x5 x3)^2", "(x5 x4)^2",   "t^-1 x3 x4 t^-1", "(t x5 x4 t^-1)^2"};
}

}  // namespace

TEST_CASE("index 2 in Z4 over the square subgroup") {
  const Presentation p = parse_presentation("< a | a^4 >");
  const CosetTable t = todd_coxeter(p, parse_words({"a^2"}, p), 100);
  REQUIRE(t.complete());
  CHECK(t.index == 2);
  CHECK(coset_action_image(t).order == 2);
}

TEST_CASE("free group over its full generator set has index 1") {
  const Presentation p = parse_presentation("< a, b | >");
  const CosetTable t = todd_coxeter(p, parse_words({"a", "b"}, p), 10);
  REQUIRE(t.complete());
  CHECK(t.index == 1);
  CHECK(coset_action_image(t).order == 1);
}

TEST_CASE("closure property: every relator traces back from every coset") {
  const Presentation p = lambda22();
  const CosetTable t = todd_coxeter(p, parse_words(delta_words(), p), 10000);
  REQUIRE(t.complete());
  for (int c = 0; c < t.index; ++c)
    for (const Word& r : p.relators) CHECK(t.trace(c, r) == c);
  for (const Word& w : t.subgroup_words) CHECK(t.trace(0, w) == 0);
}

TEST_CASE("torsion-free witness subgroup has index 16 with the D4 x Z2 fingerprint") {
  const Presentation p = lambda22();
  const CosetTable t = todd_coxeter(p, parse_words(delta_words(), p), 10000);
  REQUIRE(t.complete());
  CHECK(t.index == 16);

  const QuotientFingerprint fp = coset_action_image(t);
  CHECK(fp.order == 16);
  // Golden value computed by brute force over the 16-coset action: the
  // image has 1 identity, 11 involutions and 4 elements of order 4, with
  // abelian invariants [2,2,2].
  const std::map<long long, long long> expected{{1, 1}, {2, 11}, {4, 4}};
  CHECK(fp.element_orders == expected);
  CHECK(fp.abelian.free_rank == 0);
  CHECK(fp.abelian.torsion == std::vector<Int>{2, 2, 2});

  const WitnessReport rep =
      verify_torsion_witness(p, parse_words(delta_words(), p),
                             parse_words({"x3", "x4", "x5", "x3 x4"}, p), 10000);
  CHECK(rep.all_nontrivial);
  for (const auto& e : rep.entries) CHECK(e.nontrivial);
}

TEST_CASE("index-1 subgroup kills every witness") {
  const Presentation p = parse_presentation("< a, b | a^2, b^2 >");
  const WitnessReport rep = verify_torsion_witness(p, parse_words({"a", "b"}, p),
                                                   parse_words({"a"}, p), 100);
  CHECK_FALSE(rep.all_nontrivial);
}

TEST_CASE("trivial subgroup of Z2 sees the witness") {
  const Presentation p = parse_presentation("< a | a^2 >");
  const WitnessReport rep =
      verify_torsion_witness(p, {}, parse_words({"a"}, p), 100);
  CHECK(rep.all_nontrivial);
}

TEST_CASE("the coset action is transitive") {
  const Presentation p = lambda22();
  const CosetTable t = todd_coxeter(p, parse_words(delta_words(), p), 10000);
  REQUIRE(t.complete());
  std::vector<char> seen(static_cast<size_t>(t.index), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!queue.empty()) {
    const int c = queue.back();
    queue.pop_back();
    for (int g = 0; g < t.ngens; ++g)
      for (int sign : {+1, -1}) {
        const int d = t.act(c, g, sign);
        if (!seen[static_cast<size_t>(d)]) {
          seen[static_cast<size_t>(d)] = 1;
          ++reached;
          queue.push_back(d);
        }
      }
  }
  CHECK(reached == static_cast<size_t>(t.index));
}

TEST_CASE("enumeration index is independent of subgroup generator order") {
  const Presentation p = lambda22();
  std::vector<std::string> words = delta_words();
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 8; ++trial) {
    std::shuffle(words.begin(), words.end(), rng);
    const CosetTable t = todd_coxeter(p, parse_words(words, p), 10000);
    REQUIRE(t.complete());
    CHECK(t.index == 16);
  }
}

TEST_CASE("overflow leaves a partial table with overflowed status") {
  // Z^2 has infinite index over the trivial subgroup; the cap must trip.
  const Presentation p = parse_presentation("< a, b | [a,b] >");
  const CosetTable t = todd_coxeter(p, {}, 50);
  CHECK_FALSE(t.complete());
  CHECK(t.status == CosetTable::Status::overflowed);
  CHECK_THROWS_AS(coset_action_image(t), state_error);
}

TEST_CASE("normal subgroup: image order equals the index") {
  // <a^3> is normal in Z6 = <a | a^6>.
  const Presentation p = parse_presentation("< a | a^6 >");
  const CosetTable t = todd_coxeter(p, parse_words({"a^3"}, p), 100);
  REQUIRE(t.complete());
  CHECK(t.index == 3);
  CHECK(coset_action_image(t).order == 3);
}
