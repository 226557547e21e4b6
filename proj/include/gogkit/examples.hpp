// Registry of the explicit group presentations the toolkit reproduces,
// together with their graph-of-groups forms and metadata (tree valence,
// covolume) where applicable.
//
// Names: lm, gamma_n, bk_gamma, bk_lambda, lambda_kl.
#pragma once

#include <optional>
#include <string>

#include "gogkit/graph_of_groups.hpp"
#include "gogkit/presentation.hpp"
#include "gogkit/rational.hpp"

namespace gogkit {

struct ExampleMetadata {
  std::optional<long long> valence;    // Bass-Serre tree valence
  std::optional<Rational> covolume;    // Serre covolume of the quotient
  long long generator_count = 0;
  long long relator_count = 0;
};

struct Example {
  Presentation presentation;
  ExampleMetadata metadata;
};

struct ExampleParams {
  std::optional<long long> n;  // gamma_n: n >= 2
  std::optional<long long> r;  // bk_gamma / bk_lambda: r >= 1
  std::optional<long long> k;  // lambda_kl: k >= 2
  std::optional<long long> l;  // lambda_kl: l >= 2
};

Example example_registry(const std::string& name, const ExampleParams& params = {});

// Graph-of-groups forms of the loop/tower examples.
GraphOfGroups lm_gog();
GraphOfGroups gamma_n_gog(long long n);
GraphOfGroups bk_gamma_gog(long long r);
GraphOfGroups bk_lambda_gog(long long r);

// Covolume of the extended lattice at tower level s over branching r,
// exactly 2 / 2^(r^s).
Rational tower_covolume(long long r, long long s);

}  // namespace gogkit
