#pragma once

#include "scmorph/dimensional.hpp"
#include "scmorph/weighted.hpp"

// Vertex/edge graph operators from the morphology-on-graphs literature,
// written as compositions of the grayscale dimensional operators. The graph
// is the 1-skeleton of the ambient complex.

namespace scmorph::graph {

/// Max of f over each vertex and its edge neighbours. On every vertex with
/// at least one edge this is gray_delta_down(1,0) after gray_delta_up(0,1);
/// isolated vertices keep their value. DimOutOfRange on a 0-complex.
ValueMap vincent_dilate(const ValueMap& f);
/// Min counterpart, built on gray_epsilon_down(1,0) after gray_epsilon_up(0,1).
ValueMap vincent_erode(const ValueMap& f);

/// Edge {a,b} -> min(n(a), n(b)).
inline ValueMap edge_min_of_ends(const ValueMap& n) { return gray_epsilon_up(0, 1, n); }
/// Edge {a,b} -> max(n(a), n(b)).
inline ValueMap edge_max_of_ends(const ValueMap& n) { return gray_delta_up(0, 1, n); }
/// Vertex -> min over its incident edges (k_max if none).
inline ValueMap vertex_min_of_edges(const ValueMap& e) { return gray_epsilon_down(1, 0, e); }
/// Vertex -> max over its incident edges (k_min if none).
inline ValueMap vertex_max_of_edges(const ValueMap& e) { return gray_delta_down(1, 0, e); }

}  // namespace scmorph::graph
