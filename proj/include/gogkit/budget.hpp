#pragma once

#include <cstdlib>
#include <string>

namespace gogkit {

// Default work budgets. GOGKIT_BUDGET overrides all of them at once; the
// per-call parameters in the APIs override the environment.
namespace budgets {

inline long long env_override() {
  const char* v = std::getenv("GOGKIT_BUDGET");
  if (v == nullptr || *v == '\0') return -1;
  return std::atoll(v);
}

inline long long hom_tuples() {
  const long long e = env_override();
  return e > 0 ? e : 100'000'000LL;  // candidate tuples in count_homs
}

inline long long max_cosets() {
  const long long e = env_override();
  return e > 0 ? e : 1'000'000LL;  // live cosets in Todd-Coxeter
}

inline long long cliques() {
  const long long e = env_override();
  return e > 0 ? e : 1'000'000LL;  // spherical subset enumeration
}

inline long long ball_nodes() {
  const long long e = env_override();
  return e > 0 ? e : 1'000'000LL;  // tree/chamber ball nodes
}

inline long long dev_cells() {
  const long long e = env_override();
  return e > 0 ? e : 200'000LL;  // development cells
}

}  // namespace budgets
}  // namespace gogkit
