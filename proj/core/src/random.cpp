#include "scmorph/random.hpp"

#include <algorithm>

namespace scmorph::random {

namespace {

// Every (k)-subset of {0..n-1}, lexicographic.
void for_each_subset(int n, int k, const auto& visit) {
  std::vector<VertexId> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[i] = static_cast<VertexId>(i);
  if (k > n) return;
  for (;;) {
    visit(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == static_cast<VertexId>(n - k + i)) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

ComplexPtr random_complex(Rng& rng, const ComplexOptions& opts) {
  std::uniform_int_distribution<int> nv(1, std::max(1, opts.max_vertices));
  const int n = nv(rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<Simplex> gens;
  for (int v = 0; v < n; ++v) gens.push_back(Simplex{static_cast<VertexId>(v)});
  for (int d = 1; d <= opts.max_dim; ++d) {
    const double p = opts.keep.empty()
                         ? 0.0
                         : opts.keep[std::min<std::size_t>(d - 1, opts.keep.size() - 1)];
    std::bernoulli_distribution keep(p);
    for_each_subset(n, d + 1, [&](const std::vector<VertexId>& s) {
      if (keep(rng)) gens.push_back(Simplex(s));
    });
  }
  return Complex::build(gens, Closure::Auto);
}

SimplexSet random_set(Rng& rng, const ComplexPtr& c, double p) {
  std::bernoulli_distribution in(p);
  SimplexSet s(c);
  for (int d = 0; d <= c->dim(); ++d) {
    for (auto& b : s.slice_bits(d)) b = in(rng);
  }
  return s;
}

SimplexSet random_slice(Rng& rng, const ComplexPtr& c, int d, double p) {
  std::bernoulli_distribution in(p);
  SimplexSet s(c);
  for (auto& b : s.slice_bits(d)) b = in(rng);
  return s;
}

SimplexSet random_subcomplex(Rng& rng, const ComplexPtr& c) {
  std::uniform_real_distribution<double> density(0.0, 0.6);
  return closure(random_set(rng, c, density(rng)));
}

ValueMap random_map(Rng& rng, const ComplexPtr& c, ValueRange range, Domain domain) {
  std::uniform_int_distribution<Value> val(range.min, range.max);
  ValueMap m(c, range, domain);
  for (int d = 0; d <= c->dim(); ++d) {
    if (!domain.covers(d)) continue;
    std::vector<Value> v(c->size(d));
    for (auto& x : v) x = val(rng);
    m.assign_slice(d, std::move(v));
  }
  return m;
}

ValueMap random_stack(Rng& rng, const ComplexPtr& c, ValueRange range) {
  return gray_interior(random_map(rng, c, range, Domain::whole()));
}

}  // namespace scmorph::random
