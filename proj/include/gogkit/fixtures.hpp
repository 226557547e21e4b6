// Seeded pseudorandom graphs of finite groups for the verification suite:
// small connected Serre graphs with cyclic-by-catalog local groups and
// explicitly embedded cyclic edge groups.
#pragma once

#include "gogkit/graph_of_groups.hpp"

namespace gogkit {

// Deterministic for a fixed seed; at most `max_pairs` edge pairs and
// local groups of order <= 8.
GraphOfGroups random_finite_gog(unsigned seed, int max_pairs = 4);

}  // namespace gogkit
