#include "scmorph/dimensional.hpp"

#include <algorithm>
#include <string>

#include "incidence_kernels.hpp"
#include "scmorph/error.hpp"

namespace scmorph {

namespace {

void check_pair(const Complex& c, int lo, int hi) {
  if (lo < 0 || lo >= hi || hi > c.dim()) {
    throw Error(Errc::DimOutOfRange, "need 0 <= i < j <= " + std::to_string(c.dim()) +
                                         ", got i=" + std::to_string(lo) +
                                         " j=" + std::to_string(hi));
  }
}

void check_pure(const SimplexSet& x, int d) {
  for (int k = 0; k <= x.ambient().dim(); ++k) {
    if (k != d && x.size(k) != 0) {
      throw Error(Errc::NotPureSlice, "expected only " + std::to_string(d) +
                                          "-simplices, found " + std::to_string(x.size(k)) +
                                          " of dimension " + std::to_string(k));
    }
  }
}

template <class Op>
SimplexSet apply(const SimplexSet& x, int from, int to, std::uint8_t identity, Op op) {
  const Complex& c = x.ambient();
  auto bits = detail::walk<std::uint8_t>(c, from, to, x.slice_bits(from), identity, op);
  SimplexSet out(x.ambient_ptr());
  std::copy(bits.begin(), bits.end(), out.slice_bits(to).begin());
  return out;
}

}  // namespace

SimplexSet delta_up(int i, int j, const SimplexSet& x) {
  check_pair(x.ambient(), i, j);
  check_pure(x, i);
  return apply(x, i, j, 0, detail::Or{});
}

SimplexSet epsilon_up(int i, int j, const SimplexSet& x) {
  check_pair(x.ambient(), i, j);
  check_pure(x, i);
  return apply(x, i, j, 1, detail::And{});
}

SimplexSet delta_down(int j, int i, const SimplexSet& y) {
  check_pair(y.ambient(), i, j);
  check_pure(y, j);
  return apply(y, j, i, 0, detail::Or{});
}

SimplexSet epsilon_down(int j, int i, const SimplexSet& y) {
  check_pair(y.ambient(), i, j);
  check_pure(y, j);
  return apply(y, j, i, 1, detail::And{});
}

SimplexSet recover_star(const SimplexSet& x) {
  const int n = x.ambient().dim();
  SimplexSet out(x.ambient_ptr());
  for (int i = 0; i <= n; ++i) {
    SimplexSet xi = dim_slice(x, i);
    out |= xi;
    for (int j = i + 1; j <= n; ++j) out |= delta_up(i, j, xi);
  }
  return out;
}

SimplexSet recover_closure(const SimplexSet& x) {
  const int n = x.ambient().dim();
  SimplexSet out(x.ambient_ptr());
  for (int j = 0; j <= n; ++j) {
    SimplexSet xj = dim_slice(x, j);
    out |= xj;
    for (int i = 0; i < j; ++i) out |= delta_down(j, i, xj);
  }
  return out;
}

}  // namespace scmorph
