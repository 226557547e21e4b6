// Covolume sums: finite sums of mu(A_sigma)/|K_sigma| plus closed forms
// for declared geometric tails. Shared by the graph and complex cases.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gogkit/rational.hpp"

namespace gogkit {

struct CovolumeEntry {
  Rational mu;
  Int kernel_order = 1;  // positive
};

struct GeometricTail {
  Rational first;        // first tail term mu_k / |K_k|
  Rational ratio;        // common ratio; |ratio| < 1 required to converge
};

struct CovolumeResult {
  bool converged = true;
  Rational value = 0;
  std::string detail;  // echoes the tail bound or the divergence reason
};

// `truncated` marks an entry stream that continues beyond the given
// entries; such a stream is refused unless a tail bound is declared.
CovolumeResult covolume_sum(const std::vector<CovolumeEntry>& entries,
                            const std::optional<GeometricTail>& tail = {},
                            bool truncated = false);

}  // namespace gogkit
