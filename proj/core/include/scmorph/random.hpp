#pragma once

#include <random>

#include "scmorph/simplex_set.hpp"
#include "scmorph/weighted.hpp"

// Seeded generators for property checks: small random complexes, sets,
// subcomplexes and simplicial stacks.

namespace scmorph::random {

using Rng = std::mt19937_64;

struct ComplexOptions {
  int max_vertices = 8;
  int max_dim = 3;
  /// Inclusion probability of each candidate simplex of dimension 1, 2, 3, ...
  /// (the last entry is reused for higher dimensions).
  std::vector<double> keep = {0.35, 0.2, 0.1};
};

/// Picks 1..max_vertices vertices, keeps every vertex and each candidate
/// simplex of dimension 1..max_dim with its probability, then closes.
ComplexPtr random_complex(Rng& rng, const ComplexOptions& opts = {});

/// Each simplex independently with probability p.
SimplexSet random_set(Rng& rng, const ComplexPtr& c, double p = 0.5);
/// Each d-simplex independently with probability p; nothing else.
SimplexSet random_slice(Rng& rng, const ComplexPtr& c, int d, double p = 0.5);
/// Closure of a sparse random set, so typically a proper subcomplex.
SimplexSet random_subcomplex(Rng& rng, const ComplexPtr& c);

/// Uniform values then the grayscale interior, which makes faces dominate.
ValueMap random_stack(Rng& rng, const ComplexPtr& c, ValueRange range);
/// Uniform values on every simplex of the domain.
ValueMap random_map(Rng& rng, const ComplexPtr& c, ValueRange range, Domain domain);

}  // namespace scmorph::random
