// Exhaustive homomorphism counting into small finite groups. The count is
// an isomorphism-invariant fingerprint used to compare presentations
// produced by different constructions.
#pragma once

#include "gogkit/finite_group.hpp"
#include "gogkit/presentation.hpp"
#include "gogkit/rational.hpp"

namespace gogkit {

// Exact number of maps generators -> target satisfying every relator.
// Enumeration walks the |target|^g assignment tree with relators checked
// as soon as their support is assigned; throws budget_error when the
// visited-node count would exceed `budget` (0 = library default).
Int count_homs(const Presentation& p, const FiniteGroup& target, long long budget = 0);

struct Fingerprint {
  AbelianInvariants abelian;
  std::vector<std::pair<std::string, Int>> hom_counts;  // (target name, count)

  bool operator==(const Fingerprint& o) const = default;
  std::string str() const;
};

// Shared fingerprint used by the cross-construction comparisons:
// abelian invariants plus hom counts into the named targets.
Fingerprint fingerprint(const Presentation& p, const std::vector<std::string>& targets,
                        long long budget = 0);

FiniteGroup fingerprint_target(const std::string& name);  // "Z2","Z3","Z4","S3"

}  // namespace gogkit
