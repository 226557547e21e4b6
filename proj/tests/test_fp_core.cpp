#include <doctest.h>

#include <random>

#include "gogkit/abelian.hpp"
#include "gogkit/errors.hpp"
#include "gogkit/homcount.hpp"
#include "gogkit/presentation.hpp"
#include "gogkit/tietze.hpp"
#include "gogkit/word.hpp"

using namespace gogkit;

namespace {

// Independent reduction oracle: cancel ANY adjacent inverse pair, rescan
// from scratch, repeat until stable. Order-independent by confluence of
// free reduction.
Word brute_force_reduce(std::vector<Letter> raw) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < raw.size(); ++i) {
      if (raw[i].gen == raw[i + 1].gen && raw[i].sign == -raw[i + 1].sign) {
        raw.erase(raw.begin() + static_cast<long>(i), raw.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return Word{raw};
}

Presentation lm_presentation() {
  return parse_presentation(
      "< a, b, t | [a,b], t a^2 b^-1 t^-1 (a^2 b)^-1, t a b^2 t^-1 (a^-1 b^2)^-1 >");
}

}  // namespace

TEST_CASE("free_reduce identity and cancellation cases") {
  Presentation ctx = parse_presentation("< a, b, t | >");
  CHECK(parse_word("a a^-1", ctx).empty());
  CHECK(word_text(parse_word("a b b^-1 a", ctx), ctx) == "a^2");
  CHECK(word_text(parse_word("t a a^-1 t t^-1", ctx), ctx) == "t");
}

TEST_CASE("free_reduce agrees with pairwise-cancellation oracle and is idempotent") {
  std::mt19937 rng(20240817);
  Presentation ctx = parse_presentation("< a, b, c | >");
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> raw;
    const int len = static_cast<int>(rng() % 24);
    for (int i = 0; i < len; ++i)
      raw.push_back(Letter{static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1});
    const Word reduced = free_reduce(raw);
    CHECK(reduced == brute_force_reduce(raw));
    CHECK(free_reduce(reduced.letters) == reduced);     // idempotent
    CHECK(reduced.size() <= raw.size());                // length-nonincreasing
  }
}

TEST_CASE("presentation text grammar round-trips through JSON bit-exactly") {
  const Presentation p = lm_presentation();
  CHECK(p.generator_count() == 3);
  CHECK(p.relator_count() == 3);
  const std::string j = presentation_json(p);
  const Presentation q = presentation_from_json(j);
  CHECK(presentation_json(q) == j);
  CHECK(presentation_text(q) == presentation_text(p));
  // Text form parses back to the same object.
  const Presentation r = parse_presentation(presentation_text(p));
  CHECK(presentation_json(r) == j);
}

TEST_CASE("equation relators normalize to u v^-1") {
  const Presentation p = parse_presentation("< a, t | t a t^-1 = a^2 >");
  const Presentation q = parse_presentation("< a, t | t a t^-1 a^-2 >");
  CHECK(presentation_json(p) == presentation_json(q));
}

TEST_CASE("abelianization of small presentations") {
  const AbelianInvariants z2 = abelianization(parse_presentation("< a | a^2 >"));
  CHECK(z2.free_rank == 0);
  CHECK(z2.torsion == std::vector<Int>{2});

  const AbelianInvariants f2 = abelianization(parse_presentation("< a, b | >"));
  CHECK(f2.free_rank == 2);
  CHECK(f2.torsion.empty());
}

TEST_CASE("abelianization of the Leary-Minasyan presentation") {
  // Exponent-sum rows (0,0,0), (0,-2,0), (2,0,0): rank 1 free part and
  // two Z_2 factors.
  const AbelianInvariants inv = abelianization(lm_presentation());
  CHECK(inv.free_rank == 1);
  CHECK(inv.torsion == std::vector<Int>{2, 2});
  // Oracle: 8 homomorphisms into Z_2.
  CHECK(count_homs(lm_presentation(), FiniteGroup::cyclic(2)) == 8);
}

TEST_CASE("count_homs trivial cases") {
  const Presentation p = parse_presentation("< a | a^2 >");
  CHECK(count_homs(p, FiniteGroup::cyclic(3)) == 1);
  CHECK(count_homs(p, FiniteGroup::cyclic(2)) == 2);
}

TEST_CASE("count_homs abelian-target consistency with abelianization") {
  // #Hom(G, Z_k) = k^rank * prod gcd(d_i, k).
  const std::vector<std::string> pres_texts = {
      "< a | a^2 >",
      "< a, b | [a,b], a^4, b^6 >",
      "< a, b, t | [a,b], t a^2 b^-1 t^-1 (a^2 b)^-1, t a b^2 t^-1 (a^-1 b^2)^-1 >",
      "< a, b | a^3 b^-2 >",
  };
  for (const auto& text : pres_texts) {
    const Presentation p = parse_presentation(text);
    const AbelianInvariants inv = abelianization(p);
    for (int k : {2, 3, 4, 5, 6}) {
      Int expected = int_pow(Int(k), Int(inv.free_rank));
      for (const Int& d : inv.torsion) expected *= boost::multiprecision::gcd(d, Int(k));
      CHECK(count_homs(p, FiniteGroup::cyclic(k)) == expected);
    }
  }
}

TEST_CASE("abelianization invariant under Tietze-preserving relator edits") {
  std::mt19937 rng(99);
  const Presentation base = lm_presentation();
  const AbelianInvariants expect = abelianization(base);
  const Int expect_homs = count_homs(base, FiniteGroup::symmetric3());
  for (int trial = 0; trial < 60; ++trial) {
    Presentation p = base;
    // Random edit: permute, invert, rotate, or conjugate one relator.
    const size_t r = rng() % p.relators.size();
    switch (rng() % 4) {
      case 0:
        std::swap(p.relators[r], p.relators[rng() % p.relators.size()]);
        break;
      case 1:
        p.relators[r] = inverse(p.relators[r]);
        break;
      case 2: {
        Word w = p.relators[r];
        if (!w.empty()) {
          std::rotate(w.letters.begin(), w.letters.begin() + 1, w.letters.end());
          p.relators[r] = free_reduce(w.letters);
        }
        break;
      }
      default: {
        const int g = static_cast<int>(rng() % p.generators.size());
        Word c{{Letter{g, +1}}};
        p.relators[r] = concat(concat(c, p.relators[r]), inverse(c));
        break;
      }
    }
    CHECK(abelianization(p) == expect);
    CHECK(count_homs(p, FiniteGroup::symmetric3()) == expect_homs);
  }
}

TEST_CASE("tietze_counts literal counts") {
  const Presentation p = lm_presentation();
  CHECK(p.generator_count() == 3);
  CHECK(p.relator_count() == 3);
  const Presentation empty = parse_presentation("< | >");
  CHECK(empty.generator_count() == 0);
  CHECK(empty.relator_count() == 0);
}

TEST_CASE("simplify_presentation eliminates defined generators") {
  // c is defined by the last relator; elimination keeps the group.
  const Presentation p = parse_presentation("< a, b, c | a^2, [a,b], c a b^-1 >");
  const Presentation q = simplify_presentation(p);
  CHECK(q.generator_count() == 2);
  CHECK(abelianization(q) == abelianization(p));
  CHECK(count_homs(q, FiniteGroup::symmetric3()) == count_homs(p, FiniteGroup::symmetric3()));
}

TEST_CASE("count_homs splits over diagonal presentations of abelian groups") {
  // #Hom(Z^r + Z_{d_1} + ... , Z_k) = k^r * prod #Hom(Z_{d_i}, Z_k).
  const std::vector<std::vector<int>> diagonals = {{2}, {2, 4}, {3, 6}, {0, 2}, {0, 0, 5}};
  for (const auto& diag : diagonals) {
    Presentation p;
    std::vector<int> gens;
    for (size_t i = 0; i < diag.size(); ++i)
      gens.push_back(p.add_generator(GeneratorSymbol::parse("x" + std::to_string(i))));
    long long rank = 0;
    for (size_t i = 0; i < diag.size(); ++i) {
      if (diag[i] == 0) ++rank;
      else p.add_relator(power(Word{{Letter{gens[i], +1}}}, diag[i]));
    }
    for (size_t i = 0; i < diag.size(); ++i)
      for (size_t j = i + 1; j < diag.size(); ++j)
        p.add_relator(commutator(Word{{Letter{gens[i], +1}}}, Word{{Letter{gens[j], +1}}}));
    for (int k : {2, 4, 6}) {
      const FiniteGroup target = FiniteGroup::cyclic(k);
      Int expected = int_pow(Int(k), Int(rank));
      for (int d : diag) {
        if (d == 0) continue;
        const Presentation factor = parse_presentation("< x | x^" + std::to_string(d) + " >");
        expected *= count_homs(factor, target);
      }
      CHECK(count_homs(p, target) == expected);
    }
  }
}

TEST_CASE("count_homs rejects oversized enumeration") {
  const Presentation p = parse_presentation("< a, b, c, d, e | >");
  CHECK_THROWS_AS(count_homs(p, FiniteGroup::symmetric3(), 100), budget_error);
}

TEST_CASE("unknown generator in word is an input error") {
  Presentation ctx = parse_presentation("< a | >");
  CHECK_THROWS_AS(parse_word("a z", ctx), input_error);
}
