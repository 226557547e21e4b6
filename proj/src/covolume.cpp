#include "gogkit/covolume.hpp"

#include "gogkit/errors.hpp"

namespace gogkit {

CovolumeResult covolume_sum(const std::vector<CovolumeEntry>& entries,
                            const std::optional<GeometricTail>& tail, bool truncated) {
  if (truncated && !tail)
    throw input_error("entry stream without a declared tail bound");
  CovolumeResult res;
  for (const auto& e : entries) {
    if (e.kernel_order <= 0) throw input_error("kernel order must be positive");
    res.value += e.mu / Rational(e.kernel_order);
  }
  if (tail) {
    Rational r = tail->ratio;
    if (r < 0) r = -r;
    if (r >= 1) {
      res.converged = false;
      res.detail = "geometric tail ratio " + rational_str(tail->ratio) + " does not converge";
      return res;
    }
    res.value += tail->first / (Rational(1) - tail->ratio);
    res.detail = "geometric tail: first " + rational_str(tail->first) + ", ratio " +
                 rational_str(tail->ratio);
  }
  return res;
}

}  // namespace gogkit
