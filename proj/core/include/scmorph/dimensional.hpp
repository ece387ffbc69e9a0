#pragma once

#include "scmorph/simplex_set.hpp"

namespace scmorph {

// The four dimensional operators between the i-slice and j-slice of the
// ambient complex, 0 <= i < j <= n. Inputs must be pure slices of the
// source dimension (an empty set qualifies); outputs are pure slices of
// the target dimension. Errors: DimOutOfRange, NotPureSlice.

/// j-simplices that include some member of x (x within C_i).
SimplexSet delta_up(int i, int j, const SimplexSet& x);
/// j-simplices all of whose i-faces are members of x.
SimplexSet epsilon_up(int i, int j, const SimplexSet& x);
/// i-simplices included in some member of y (y within C_j).
SimplexSet delta_down(int j, int i, const SimplexSet& y);
/// i-simplices whose j-cofaces are all members of y.
SimplexSet epsilon_down(int j, int i, const SimplexSet& y);

/// Star and closure rebuilt from delta_up / delta_down over all dimension
/// pairs; the i == j terms contribute the slice itself.
SimplexSet recover_star(const SimplexSet& x);
SimplexSet recover_closure(const SimplexSet& x);

// Binary graph operators expressed on a 1-complex (vertices = C_0,
// edges = C_1).
namespace graph {
inline SimplexSet edges_both_ends_in(const SimplexSet& vertices) {
  return epsilon_up(0, 1, vertices);
}
inline SimplexSet edges_touching(const SimplexSet& vertices) {
  return delta_up(0, 1, vertices);
}
inline SimplexSet vertices_all_edges_in(const SimplexSet& edges) {
  return epsilon_down(1, 0, edges);
}
inline SimplexSet vertices_of(const SimplexSet& edges) { return delta_down(1, 0, edges); }
}  // namespace graph

}  // namespace scmorph
