#include "scmorph/graph_ops.hpp"

#include <algorithm>

namespace scmorph::graph {

namespace {

// An isolated vertex has no edge to route through, so the composite gives
// the lattice bound there; the closed neighbourhood is just the vertex.
template <class Pick>
ValueMap merge_with_input(const ValueMap& f, ValueMap composite, Pick pick) {
  auto own = f.slice_values(0);
  auto got = composite.slice_values(0);
  std::vector<Value> out(got.size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = pick(own[v], got[v]);
  composite.assign_slice(0, std::move(out));
  return composite;
}

}  // namespace

ValueMap vincent_dilate(const ValueMap& f) {
  return merge_with_input(f, gray_delta_down(1, 0, gray_delta_up(0, 1, f)),
                          [](Value a, Value b) { return std::max(a, b); });
}

ValueMap vincent_erode(const ValueMap& f) {
  return merge_with_input(f, gray_epsilon_down(1, 0, gray_epsilon_up(0, 1, f)),
                          [](Value a, Value b) { return std::min(a, b); });
}

}  // namespace scmorph::graph
