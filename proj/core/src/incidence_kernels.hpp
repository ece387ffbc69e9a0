#pragma once

#include <span>
#include <vector>

#include "scmorph/complex.hpp"

namespace scmorph::detail {

// One codimension-1 step from dimension d to d+1:
//   out[x] = fold(op, identity, in[f] for f a facet of x).
template <class T, class Op>
std::vector<T> step_up(const Complex& c, int d, std::span<const T> in, T identity, Op op) {
  std::vector<T> out(c.size(d + 1), identity);
  for (Index x = 0; x < out.size(); ++x) {
    T acc = identity;
    for (Index f : c.faces(d + 1, x)) acc = op(acc, in[f]);
    out[x] = acc;
  }
  return out;
}

// One codimension-1 step from dimension d to d-1:
//   out[x] = fold(op, identity, in[u] for u a coface of x).
template <class T, class Op>
std::vector<T> step_down(const Complex& c, int d, std::span<const T> in, T identity, Op op) {
  std::vector<T> out(c.size(d - 1), identity);
  for (Index x = 0; x < out.size(); ++x) {
    T acc = identity;
    for (Index u : c.cofaces(d - 1, x)) acc = op(acc, in[u]);
    out[x] = acc;
  }
  return out;
}

// Iterated steps from dimension `from` to dimension `to`. Composition of
// same-kind codim-1 steps equals the direct operator between the two
// dimensions (every face chain passes through each intermediate slice).
template <class T, class Op>
std::vector<T> walk(const Complex& c, int from, int to, std::span<const T> in, T identity,
                    Op op) {
  std::vector<T> cur(in.begin(), in.end());
  if (from < to) {
    for (int d = from; d < to; ++d) cur = step_up<T>(c, d, cur, identity, op);
  } else {
    for (int d = from; d > to; --d) cur = step_down<T>(c, d, cur, identity, op);
  }
  return cur;
}

struct Or {
  template <class T>
  T operator()(T a, T b) const { return static_cast<T>(a | b); }
};
struct And {
  template <class T>
  T operator()(T a, T b) const { return static_cast<T>(a & b); }
};
struct Max {
  template <class T>
  T operator()(T a, T b) const { return a < b ? b : a; }
};
struct Min {
  template <class T>
  T operator()(T a, T b) const { return b < a ? b : a; }
};

}  // namespace scmorph::detail
