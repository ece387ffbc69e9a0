#include "laws.hpp"

#include <algorithm>
#include <sstream>

#include "oracle.hpp"
#include "scmorph/builders.hpp"
#include "scmorph/dimensional.hpp"
#include "scmorph/error.hpp"
#include "scmorph/filters.hpp"
#include "scmorph/graph_ops.hpp"
#include "scmorph/io.hpp"
#include "scmorph/weighted.hpp"

namespace scmorph::check {
namespace {

using Result = std::optional<std::string>;
using random::Rng;

constexpr int kTrials = 4;
const ValueRange kSmall{0, 7};

std::string show(const SimplexSet& x) {
  std::string s = "{";
  bool first = true;
  for (const auto& m : x.members()) {
    if (!first) s += ' ';
    s += m.to_string();
    first = false;
  }
  return s + "}";
}

std::string show(const ValueMap& m) {
  std::string s;
  const Complex& c = m.ambient();
  for (int d = 0; d <= c.dim(); ++d) {
    if (!m.domain().covers(d)) continue;
    for (Index i = 0; i < c.size(d); ++i) {
      s += c.simplex(d, i).to_string() + "=" + std::to_string(m.at(d, i)) + " ";
    }
  }
  return s;
}

Result differ(const std::string& what, const SimplexSet& got, const SimplexSet& want) {
  if (got == want) return std::nullopt;
  return what + ": got " + show(got) + ", expected " + show(want);
}

Result differ(const std::string& what, const ValueMap& got, const ValueMap& want) {
  if (got == want) return std::nullopt;
  return what + ": got " + show(got) + "expected " + show(want);
}

Result require(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

#define LAW_TRY(expr)               \
  do {                              \
    if (auto r_ = (expr)) return r_; \
  } while (0)

std::vector<std::pair<int, int>> pairs(const Complex& c) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i <= c.dim(); ++i) {
    for (int j = i + 1; j <= c.dim(); ++j) out.emplace_back(i, j);
  }
  return out;
}

SimplexSet full_slice(const ComplexPtr& c, int d) { return dim_slice(SimplexSet::full(c), d); }

// Pointwise M <= M' by raising random entries.
ValueMap raise(Rng& rng, const ValueMap& m) {
  ValueMap out = m;
  const Complex& c = m.ambient();
  std::uniform_int_distribution<int> coin(0, 1);
  for (int d = 0; d <= c.dim(); ++d) {
    if (!m.domain().covers(d)) continue;
    for (Index i = 0; i < c.size(d); ++i) {
      if (coin(rng)) {
        std::uniform_int_distribution<Value> v(m.at(d, i), m.range().max);
        out.set(d, i, v(rng));
      }
    }
  }
  return out;
}

bool pointwise_le(const ValueMap& a, const ValueMap& b) {
  const Complex& c = a.ambient();
  for (int d = 0; d <= c.dim(); ++d) {
    if (!a.domain().covers(d)) continue;
    for (Index i = 0; i < c.size(d); ++i) {
      if (a.at(d, i) > b.at(d, i)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- core

Result closure_star_oracle(const ComplexPtr& c, Rng& rng) {
  for (int t = 0; t < kTrials; ++t) {
    auto x = random::random_set(rng, c, 0.2 + 0.2 * t);
    LAW_TRY(differ("closure", closure(x), oracle::closure(x)));
    LAW_TRY(differ("star", star(x), oracle::star(x)));
    LAW_TRY(differ("complement", complement(x), oracle::complement(x)));
    LAW_TRY(differ("interior", interior(x), oracle::interior(x)));
  }
  return std::nullopt;
}

Result closure_star_axioms(const ComplexPtr& c, Rng& rng) {
  for (int t = 0; t < kTrials; ++t) {
    auto x = random::random_set(rng, c, 0.3);
    auto y = x | random::random_set(rng, c, 0.3);
    auto cx = closure(x);
    auto sx = star(x);
    LAW_TRY(require(x.is_subset_of(cx), "closure not extensive on " + show(x)));
    LAW_TRY(require(closure(cx) == cx, "closure not idempotent on " + show(x)));
    LAW_TRY(require(cx.is_subset_of(closure(y)), "closure not increasing on " + show(x)));
    LAW_TRY(require(oracle::is_subcomplex(cx), "closure is not a complex on " + show(x)));
    LAW_TRY(require(x.is_subset_of(sx), "star not extensive on " + show(x)));
    LAW_TRY(require(star(sx) == sx, "star not idempotent on " + show(x)));
    LAW_TRY(require(sx.is_subset_of(star(y)), "star not increasing on " + show(x)));
    LAW_TRY(require(oracle::is_subcomplex(oracle::complement(sx)),
                    "star of " + show(x) + " is not a star"));
  }
  return std::nullopt;
}

Result interior_adjunction(const ComplexPtr& c, Rng& rng) {
  for (int t = 0; t < 3 * kTrials; ++t) {
    auto x = random::random_set(rng, c, 0.15);
    auto y = t % 2 ? closure(x) | random::random_set(rng, c, 0.3) : random::random_set(rng, c, 0.6);
    const bool lhs = closure(x).is_subset_of(y);
    const bool rhs = x.is_subset_of(interior(y));
    if (lhs != rhs) return "Cl(X) <= Y and X <= int(Y) disagree for X=" + show(x) + " Y=" + show(y);
  }
  return std::nullopt;
}

Result subcomplex_star_duality(const ComplexPtr& c, Rng& rng) {
  auto empty = SimplexSet(c);
  auto all = SimplexSet::full(c);
  for (const auto& s : {empty, all}) {
    LAW_TRY(require(is_subcomplex(s) && is_star(s), "empty set or whole complex misclassified"));
  }
  for (int t = 0; t < 3 * kTrials; ++t) {
    SimplexSet x = t % 3 == 0   ? random::random_set(rng, c, 0.5)
                   : t % 3 == 1 ? random::random_subcomplex(rng, c)
                                : complement(random::random_subcomplex(rng, c));
    LAW_TRY(require(is_subcomplex(x) == oracle::is_subcomplex(x),
                    "is_subcomplex disagrees with enumeration on " + show(x)));
    LAW_TRY(require(is_subcomplex(x) == is_star(complement(x)),
                    "is_subcomplex(X) != is_star(complement X) on " + show(x)));
  }
  return std::nullopt;
}

// ---------------------------------------------------------- dimensional

Result definition_oracle(const ComplexPtr& c, Rng& rng) {
  for (auto [i, j] : pairs(*c)) {
    for (int t = 0; t < kTrials; ++t) {
      auto x = random::random_slice(rng, c, i, 0.25 * (t + 1) - 0.1);
      auto y = random::random_slice(rng, c, j, 0.25 * (t + 1) - 0.1);
      const std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ") ";
      LAW_TRY(differ("delta_up" + ij + show(x), delta_up(i, j, x), oracle::delta_up(i, j, x)));
      LAW_TRY(differ("epsilon_up" + ij + show(x), epsilon_up(i, j, x), oracle::epsilon_up(i, j, x)));
      LAW_TRY(differ("delta_down" + ij + show(y), delta_down(j, i, y), oracle::delta_down(j, i, y)));
      LAW_TRY(differ("epsilon_down" + ij + show(y), epsilon_down(j, i, y),
                     oracle::epsilon_down(j, i, y)));
    }
  }
  return std::nullopt;
}

Result star_closure_forms(const ComplexPtr& c, Rng& rng) {
  for (auto [i, j] : pairs(*c)) {
    for (int t = 0; t < kTrials; ++t) {
      auto x = random::random_slice(rng, c, i);
      auto y = random::random_slice(rng, c, j);
      auto cx = full_slice(c, i) - x;
      auto cy = full_slice(c, j) - y;
      LAW_TRY(differ("delta_up vs St", delta_up(i, j, x), dim_slice(oracle::star(x), j)));
      LAW_TRY(differ("delta_down vs Cl", delta_down(j, i, y), dim_slice(oracle::closure(y), i)));
      // complement taken inside the slice; the other dimensions do not matter after slicing
      LAW_TRY(differ("epsilon_up vs St", epsilon_up(i, j, x),
                     dim_slice(oracle::complement(oracle::star(cx)), j)));
      LAW_TRY(differ("epsilon_down vs Cl", epsilon_down(j, i, y),
                     dim_slice(oracle::complement(oracle::closure(cy)), i)));
    }
  }
  return std::nullopt;
}

Result dimensional_adjunction(const ComplexPtr& c, Rng& rng) {
  for (auto [i, j] : pairs(*c)) {
    for (int t = 0; t < 5; ++t) {
      auto x = random::random_slice(rng, c, i, 0.3 + 0.1 * t);
      auto y = random::random_slice(rng, c, j, 0.3 + 0.1 * t);
      if (t >= 3) {
        // bias towards the interesting side of the equivalences
        x |= delta_down(j, i, y);
        y |= delta_up(i, j, x);
      }
      if (delta_down(j, i, y).is_subset_of(x) != y.is_subset_of(epsilon_up(i, j, x))) {
        return "delta_down/epsilon_up adjunction fails for X=" + show(x) + " Y=" + show(y);
      }
      if (delta_up(i, j, x).is_subset_of(y) != x.is_subset_of(epsilon_down(j, i, y))) {
        return "delta_up/epsilon_down adjunction fails for X=" + show(x) + " Y=" + show(y);
      }
    }
  }
  return std::nullopt;
}

Result dimensional_duality(const ComplexPtr& c, Rng& rng) {
  for (auto [i, j] : pairs(*c)) {
    for (int t = 0; t < kTrials; ++t) {
      auto x = random::random_slice(rng, c, i);
      auto y = random::random_slice(rng, c, j);
      LAW_TRY(differ("epsilon_up duality",  epsilon_up(i, j, x),
                     full_slice(c, j) - delta_up(i, j, full_slice(c, i) - x)));
      LAW_TRY(differ("epsilon_down duality", epsilon_down(j, i, y),
                     full_slice(c, i) - delta_down(j, i, full_slice(c, j) - y)));
    }
  }
  return std::nullopt;
}

Result composition_collapse(const ComplexPtr& c, Rng& rng) {
  const int n = c->dim();
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        auto x = random::random_slice(rng, c, i);
        auto z = random::random_slice(rng, c, k);
        const std::string ijk =
            " i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
        LAW_TRY(differ("delta_up collapse" + ijk, delta_up(j, k, delta_up(i, j, x)), delta_up(i, k, x)));
        LAW_TRY(differ("epsilon_up collapse" + ijk, epsilon_up(j, k, epsilon_up(i, j, x)),
                       epsilon_up(i, k, x)));
        LAW_TRY(differ("delta_down collapse" + ijk, delta_down(j, i, delta_down(k, j, z)),
                       delta_down(k, i, z)));
        LAW_TRY(differ("epsilon_down collapse" + ijk, epsilon_down(j, i, epsilon_down(k, j, z)),
                       epsilon_down(k, i, z)));
      }
    }
  }
  return std::nullopt;
}

Result higher_intermediary(const ComplexPtr& c, Rng& rng) {
  const int n = c->dim();
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        auto x = random::random_slice(rng, c, i);
        const std::string ijk =
            " X=" + show(x) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
        LAW_TRY(differ("delta_down.delta_up" + ijk, delta_down(j, i, delta_up(i, j, x)),
                       delta_down(k, i, delta_up(i, k, x))));
        LAW_TRY(differ("epsilon_down.epsilon_up" + ijk, epsilon_down(j, i, epsilon_up(i, j, x)),
                       epsilon_down(k, i, epsilon_up(i, k, x))));
        LAW_TRY(differ("delta_down.epsilon_up" + ijk, delta_down(j, i, epsilon_up(i, j, x)),
                       delta_down(k, i, epsilon_up(i, k, x))));
        LAW_TRY(differ("epsilon_down.delta_up" + ijk, epsilon_down(j, i, delta_up(i, j, x)),
                       epsilon_down(k, i, delta_up(i, k, x))));
      }
    }
  }
  return std::nullopt;
}

// For i < j < k on the k-slice, through i versus through j.
Result lower_intermediary_inclusions(const ComplexPtr& c, Rng& rng) {
  const int n = c->dim();
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        auto z = random::random_slice(rng, c, k);
        const std::string ijk = " Z=" + show(z) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
        LAW_TRY(require(delta_up(j, k, delta_down(k, j, z)).is_subset_of(delta_up(i, k, delta_down(k, i, z))),
                        "delta_up.delta_down inclusion fails" + ijk));
        LAW_TRY(require(epsilon_up(i, k, epsilon_down(k, i, z))
                            .is_subset_of(epsilon_up(j, k, epsilon_down(k, j, z))),
                        "epsilon_up.epsilon_down inclusion fails" + ijk));
      }
    }
  }
  return std::nullopt;
}

Result lower_intermediary_equalities(const ComplexPtr& c, Rng& rng) {
  const int n = c->dim();
  for (int i = 0; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        auto z = random::random_slice(rng, c, k);
        const std::string ijk = " Z=" + show(z) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
        LAW_TRY(differ("delta_up.epsilon_down" + ijk, delta_up(i, k, epsilon_down(k, i, z)),
                       delta_up(j, k, epsilon_down(k, j, z))));
        LAW_TRY(differ("epsilon_up.delta_down" + ijk, epsilon_up(i, k, delta_down(k, i, z)),
                       epsilon_up(j, k, delta_down(k, j, z))));
      }
    }
  }
  return std::nullopt;
}

Result star_closure_recovery(const ComplexPtr& c, Rng& rng) {
  for (int t = 0; t < kTrials; ++t) {
    auto x = random::random_set(rng, c, 0.15 + 0.15 * t);
    LAW_TRY(differ("recover_star " + show(x), recover_star(x), oracle::star(x)));
    LAW_TRY(differ("recover_closure " + show(x), recover_closure(x), oracle::closure(x)));
  }
  return std::nullopt;
}

Result dimensional_monotone(const ComplexPtr& c, Rng& rng) {
  for (auto [i, j] : pairs(*c)) {
    auto x = random::random_slice(rng, c, i, 0.3);
    auto x2 = x | random::random_slice(rng, c, i, 0.3);
    auto y = random::random_slice(rng, c, j, 0.3);
    auto y2 = y | random::random_slice(rng, c, j, 0.3);
    LAW_TRY(require(delta_up(i, j, x).is_subset_of(delta_up(i, j, x2)), "delta_up not increasing"));
    LAW_TRY(require(epsilon_up(i, j, x).is_subset_of(epsilon_up(i, j, x2)), "epsilon_up not increasing"));
    LAW_TRY(require(delta_down(j, i, y).is_subset_of(delta_down(j, i, y2)), "delta_down not increasing"));
    LAW_TRY(require(epsilon_down(j, i, y).is_subset_of(epsilon_down(j, i, y2)),
                    "epsilon_down not increasing"));
  }
  return std::nullopt;
}

ComplexPtr one_skeleton(const Complex& c) {
  std::vector<Simplex> gens;
  for (int d = 0; d <= std::min(1, c.dim()); ++d) {
    for (const auto& s : c.simplices(d)) gens.push_back(s);
  }
  return Complex::build(gens, Closure::Require);
}

Result graph_compat(const ComplexPtr& c, Rng& rng) {
  if (c->dim() < 1) return std::nullopt;
  auto g = one_skeleton(*c);
  for (int t = 0; t < kTrials; ++t) {
    auto f = random::random_map(rng, g, kSmall, Domain::slice(0));
    auto dil = graph::vincent_dilate(f);
    auto ero = graph::vincent_erode(f);
    auto want_d = oracle::neighbourhood_extremum(f, oracle::Extremum::Max);
    auto want_e = oracle::neighbourhood_extremum(f, oracle::Extremum::Min);
    auto got_d = dil.slice_values(0);
    auto got_e = ero.slice_values(0);
    if (!std::equal(got_d.begin(), got_d.end(), want_d.begin(), want_d.end())) {
      return "vincent_dilate differs from neighbourhood max on " + show(f);
    }
    if (!std::equal(got_e.begin(), got_e.end(), want_e.begin(), want_e.end())) {
      return "vincent_erode differs from neighbourhood min on " + show(f);
    }
    auto v = random::random_slice(rng, g, 0);
    auto e = random::random_slice(rng, g, 1);
    LAW_TRY(differ("edges_both_ends_in", graph::edges_both_ends_in(v), oracle::epsilon_up(0, 1, v)));
    LAW_TRY(differ("edges_touching", graph::edges_touching(v), oracle::delta_up(0, 1, v)));
    LAW_TRY(differ("vertices_all_edges_in", graph::vertices_all_edges_in(e),
                   oracle::epsilon_down(1, 0, e)));
    LAW_TRY(differ("vertices_of", graph::vertices_of(e), oracle::delta_down(1, 0, e)));
  }
  return std::nullopt;
}

// ------------------------------------------------------------- weighted

struct NamedOp {
  std::string name;
  int from;  // -1 = whole complex
  int to;
  SetOperator op;
};

std::vector<NamedOp> increasing_ops(const Complex& c) {
  std::vector<NamedOp> ops = {
      {"closure", -1, -1, [](const SimplexSet& x) { return closure(x); }},
      {"star", -1, -1, [](const SimplexSet& x) { return star(x); }},
      {"interior", -1, -1, [](const SimplexSet& x) { return interior(x); }},
  };
  for (auto [i, j] : pairs(c)) {
    const std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    ops.push_back({"delta_up" + ij, i, j, [i, j](const SimplexSet& x) { return delta_up(i, j, x); }});
    ops.push_back({"epsilon_up" + ij, i, j, [i, j](const SimplexSet& x) { return epsilon_up(i, j, x); }});
    ops.push_back({"delta_down" + ij, j, i, [i, j](const SimplexSet& y) { return delta_down(j, i, y); }});
    ops.push_back({"epsilon_down" + ij, j, i,
                   [i, j](const SimplexSet& y) { return epsilon_down(j, i, y); }});
  }
  return ops;
}

Domain domain_of(int d) { return d < 0 ? Domain::whole() : Domain::slice(d); }

Result superposition(const std::string& name, const ValueMap& extended, const ValueMap& m,
                     const SetOperator& op) {
  for (Value k = m.range().min; k <= m.range().max; ++k) {
    auto got = threshold(extended, k);
    auto want = op(threshold(m, k));
    if (got != want) {
      return name + " at level " + std::to_string(k) + ": threshold of extension " + show(got) +
             ", operator on threshold " + show(want) + " for M = " + show(m);
    }
  }
  return std::nullopt;
}

Result stack_superposition(const ComplexPtr& c, Rng& rng) {
  for (const auto& op : increasing_ops(*c)) {
    auto m = random::random_map(rng, c, kSmall, domain_of(op.from));
    auto ext = stack_extend(op.op, m, domain_of(op.to));
    LAW_TRY(superposition(op.name, ext, m, op.op));
  }
  return std::nullopt;
}

Result closed_forms(const ComplexPtr& c, Rng& rng) {
  using oracle::Extremum;
  for (auto [i, j] : pairs(*c)) {
    auto mi = random::random_map(rng, c, kSmall, Domain::slice(i));
    auto mj = random::random_map(rng, c, kSmall, Domain::slice(j));
    const std::string ij = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    auto du = [=](const SimplexSet& x) { return delta_up(i, j, x); };
    auto eu = [=](const SimplexSet& x) { return epsilon_up(i, j, x); };
    auto dd = [=](const SimplexSet& y) { return delta_down(j, i, y); };
    auto ed = [=](const SimplexSet& y) { return epsilon_down(j, i, y); };
    LAW_TRY(differ("gray_delta_up" + ij, gray_delta_up(i, j, mi),
                   stack_extend(du, mi, Domain::slice(j))));
    LAW_TRY(differ("gray_epsilon_up" + ij, gray_epsilon_up(i, j, mi),
                   stack_extend(eu, mi, Domain::slice(j))));
    LAW_TRY(differ("gray_delta_down" + ij, gray_delta_down(j, i, mj),
                   stack_extend(dd, mj, Domain::slice(i))));
    LAW_TRY(differ("gray_epsilon_down" + ij, gray_epsilon_down(j, i, mj),
                   stack_extend(ed, mj, Domain::slice(i))));
    LAW_TRY(differ("gray_delta_up scan" + ij, gray_delta_up(i, j, mi),
                   oracle::gray_scan(mi, i, j, Extremum::Max)));
    LAW_TRY(differ("gray_epsilon_up scan" + ij, gray_epsilon_up(i, j, mi),
                   oracle::gray_scan(mi, i, j, Extremum::Min)));
    LAW_TRY(differ("gray_delta_down scan" + ij, gray_delta_down(j, i, mj),
                   oracle::gray_scan(mj, j, i, Extremum::Max)));
    LAW_TRY(differ("gray_epsilon_down scan" + ij, gray_epsilon_down(j, i, mj),
                   oracle::gray_scan(mj, j, i, Extremum::Min)));
  }
  auto m = random::random_map(rng, c, kSmall, Domain::whole());
  LAW_TRY(differ("gray_interior", gray_interior(m),
                 stack_extend([](const SimplexSet& x) { return interior(x); }, m, Domain::whole())));
  return std::nullopt;
}

Result gray_duality(const ComplexPtr& c, Rng& rng) {
  for (auto [i, j] : pairs(*c)) {
    auto mi = random::random_map(rng, c, kSmall, Domain::slice(i));
    auto mj = random::random_map(rng, c, kSmall, Domain::slice(j));
    LAW_TRY(differ("gray_epsilon_down duality", gray_epsilon_down(j, i, mj),
                   dual_map(gray_delta_down(j, i, dual_map(mj)))));
    LAW_TRY(differ("gray_epsilon_up duality", gray_epsilon_up(i, j, mi),
                   dual_map(gray_delta_up(i, j, dual_map(mi)))));
  }
  return std::nullopt;
}

Result gray_monotone(const ComplexPtr& c, Rng& rng) {
  for (auto [i, j] : pairs(*c)) {
    auto mi = random::random_map(rng, c, kSmall, Domain::slice(i));
    auto mj = random::random_map(rng, c, kSmall, Domain::slice(j));
    auto mi2 = raise(rng, mi);
    auto mj2 = raise(rng, mj);
    LAW_TRY(require(pointwise_le(gray_delta_up(i, j, mi), gray_delta_up(i, j, mi2)),
                    "gray_delta_up not increasing"));
    LAW_TRY(require(pointwise_le(gray_epsilon_up(i, j, mi), gray_epsilon_up(i, j, mi2)),
                    "gray_epsilon_up not increasing"));
    LAW_TRY(require(pointwise_le(gray_delta_down(j, i, mj), gray_delta_down(j, i, mj2)),
                    "gray_delta_down not increasing"));
    LAW_TRY(require(pointwise_le(gray_epsilon_down(j, i, mj), gray_epsilon_down(j, i, mj2)),
                    "gray_epsilon_down not increasing"));
  }
  auto m = random::random_map(rng, c, kSmall, Domain::whole());
  LAW_TRY(require(pointwise_le(gray_interior(m), gray_interior(raise(rng, m))),
                  "gray_interior not increasing"));
  return std::nullopt;
}

bool faces_dominate(const ValueMap& m, bool faces_ge) {
  for (const auto& x : m.ambient().all_simplices()) {
    for (const auto& y : oracle::nonempty_subsets(x)) {
      const Value fy = m.at(y);
      const Value fx = m.at(x);
      if (faces_ge ? fy < fx : fy > fx) return false;
    }
  }
  return true;
}

Result stack_predicates(const ComplexPtr& c, Rng& rng) {
  for (int t = 0; t < 3 * kTrials; ++t) {
    ValueMap m = t % 3 == 0   ? random::random_map(rng, c, kSmall, Domain::whole())
                 : t % 3 == 1 ? random::random_stack(rng, c, kSmall)
                              : dual_map(random::random_stack(rng, c, kSmall));
    const bool simp = is_simplicial_stack(m);
    const bool star = is_starred_stack(m);
    LAW_TRY(require(simp == oracle::thresholds_are_subcomplexes(m),
                    "simplicial stack predicate disagrees with thresholds on " + show(m)));
    LAW_TRY(require(simp == faces_dominate(m, true),
                    "simplicial stack predicate disagrees with face inequality on " + show(m)));
    LAW_TRY(require(star == oracle::thresholds_are_stars(m),
                    "starred stack predicate disagrees with thresholds on " + show(m)));
    LAW_TRY(require(star == faces_dominate(m, false),
                    "starred stack predicate disagrees with face inequality on " + show(m)));
    LAW_TRY(require(simp == is_starred_stack(dual_map(m)),
                    "simplicial(M) != starred(dual M) on " + show(m)));
  }
  return std::nullopt;
}

// -------------------------------------------------------------- filters

Result filter_oracle(const ComplexPtr& c, Rng& rng) {
  if (c->dim() == 0) return std::nullopt;
  for (int t = 0; t < kTrials; ++t) {
    auto x = random::random_subcomplex(rng, c);
    LAW_TRY(differ("dilate_g " + show(x), dilate_g(x), oracle::dilate_g(x)));
    LAW_TRY(differ("erode_g " + show(x), erode_g(x), oracle::erode_g(x)));
    LAW_TRY(differ("dilate_s " + show(x), dilate_s(x), oracle::dilate_s(x)));
    LAW_TRY(differ("erode_s " + show(x), erode_s(x), oracle::erode_s(x)));
  }
  return std::nullopt;
}

Result filter_adjunction(const ComplexPtr& c, Rng& rng) {
  for (int t = 0; t < 3 * kTrials; ++t) {
    auto x = random::random_subcomplex(rng, c);
    auto y = random::random_subcomplex(rng, c);
    if (t % 3 == 1) y = closure(y | dilate_g(x));
    if (t % 3 == 2) x &= erode_g(y);
    if (dilate_g(x).is_subset_of(y) != x.is_subset_of(erode_g(y))) {
      return "dilate_g/erode_g adjunction fails for X=" + show(x) + " Y=" + show(y);
    }
  }
  return std::nullopt;
}

Result slice_locality(const ComplexPtr& c, Rng& rng) {
  for (int t = 0; t < kTrials; ++t) {
    auto x = random::random_subcomplex(rng, c);
    auto y = random::random_subcomplex(rng, c);
    auto dx = dilate_g(x);
    auto dy = dilate_g(y);
    for (int i = 0; i <= c->dim(); ++i) {
      auto xi = dim_slice(x, i);
      if (xi != dim_slice(y, i)) continue;
      LAW_TRY(differ("slice " + std::to_string(i) + " of dilate_g depends on other slices",
                     dim_slice(dx, i), dim_slice(dy, i)));
    }
    // same i-slice, everything else rebuilt around it
    for (int i = 0; i <= c->dim(); ++i) {
      auto xi = dim_slice(x, i);
      auto z = closure(xi | random::random_set(rng, c, 0.3));
      if (dim_slice(z, i) != xi) continue;
      LAW_TRY(differ("slice " + std::to_string(i) + " of dilate_g depends on other slices",
                     dim_slice(dilate_g(z), i), dim_slice(dx, i)));
    }
  }
  return std::nullopt;
}

Result opening_closing(const ComplexPtr& c, Rng& rng) {
  for (int size = 1; size <= 3; ++size) {
    auto x = random::random_subcomplex(rng, c);
    auto x2 = closure(x | random::random_subcomplex(rng, c));
    auto o = open_g(size, x);
    auto cl = close_g(size, x);
    const std::string tag = " size " + std::to_string(size) + " on " + show(x);
    LAW_TRY(require(open_g(size, o) == o, "open_g not idempotent" + tag));
    LAW_TRY(require(close_g(size, cl) == cl, "close_g not idempotent" + tag));
    LAW_TRY(require(o.is_subset_of(x), "open_g not anti-extensive" + tag));
    LAW_TRY(require(x.is_subset_of(cl), "close_g not extensive" + tag));
    LAW_TRY(require(o.is_subset_of(open_g(size, x2)), "open_g not increasing" + tag));
    LAW_TRY(require(cl.is_subset_of(close_g(size, x2)), "close_g not increasing" + tag));
  }
  return std::nullopt;
}

Result granulometry(const ComplexPtr& c, Rng& rng) {
  auto x = random::random_subcomplex(rng, c);
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      const std::string tag = " i=" + std::to_string(i) + " j=" + std::to_string(j) + " on " + show(x);
      LAW_TRY(require(open_g(i, x).is_subset_of(open_g(j, x)), "granulometry fails" + tag));
      LAW_TRY(require(close_g(j, x).is_subset_of(close_g(i, x)), "anti-granulometry fails" + tag));
    }
  }
  return std::nullopt;
}

Result asf_absorption(const ComplexPtr& c, Rng& rng) {
  auto x = random::random_subcomplex(rng, c);
  for (int i = 2; i <= 3; ++i) {
    for (int j = 1; j < i; ++j) {
      const std::string tag = " i=" + std::to_string(i) + " j=" + std::to_string(j) + " on " + show(x);
      LAW_TRY(differ("asf absorption" + tag, asf_g(i, asf_g(j, x)), asf_g(i, x)));
      LAW_TRY(differ("asf-prime absorption" + tag, asf_g_prime(i, asf_g_prime(j, x)),
                     asf_g_prime(i, x)));
    }
  }
  return std::nullopt;
}

Result lower_variant_equivalence(const ComplexPtr& c, Rng& rng) {
  const int n = c->dim();
  for (int t = 0; t < kTrials; ++t) {
    for (int i = 1; i <= n - 1; ++i) {
      auto x = random::random_slice(rng, c, i);
      LAW_TRY(differ("delta per-dimension at i=" + std::to_string(i) + " X=" + show(x),
                     delta_up(i - 1, i, delta_down(i, i - 1, x)),
                     delta_down(i + 1, i, delta_up(i, i + 1, x))));
      LAW_TRY(differ("epsilon per-dimension at i=" + std::to_string(i) + " X=" + show(x),
                     epsilon_up(i - 1, i, epsilon_down(i, i - 1, x)),
                     epsilon_down(i + 1, i, epsilon_up(i, i + 1, x))));
    }
    auto x = random::random_subcomplex(rng, c);
    LAW_TRY(differ("dilate_s vs dilate_g on " + show(x), dilate_s(x), dilate_g(x)));
    LAW_TRY(differ("erode_s vs erode_g on " + show(x), erode_s(x), erode_g(x)));
  }
  return std::nullopt;
}

std::vector<FilterSpec> sample_specs() {
  return {
      {FilterKind::Dilate, 1, Variant::Up},   {FilterKind::Erode, 1, Variant::Up},
      {FilterKind::Dilate, 2, Variant::Down}, {FilterKind::Erode, 1, Variant::Down},
      {FilterKind::Open, 1, Variant::Up},     {FilterKind::Close, 2, Variant::Up},
      {FilterKind::Asf, 2, Variant::Up},      {FilterKind::AsfPrime, 2, Variant::Up},
  };
}

Result filter_outputs_subcomplex(const ComplexPtr& c, Rng& rng) {
  auto x = random::random_subcomplex(rng, c);
  for (const auto& spec : sample_specs()) {
    LAW_TRY(require(oracle::is_subcomplex(apply_filter(spec, x)),
                    spec.to_string() + " output is not a subcomplex for " + show(x)));
  }
  return std::nullopt;
}

Result gray_filter_extension(const ComplexPtr& c, Rng& rng) {
  auto m = random::random_stack(rng, c, kSmall);
  for (const auto& spec : sample_specs()) {
    auto op = [spec](const SimplexSet& x) { return apply_filter(spec, x); };
    auto got = gray_filter(spec, m);
    LAW_TRY(differ(spec.to_string() + " vs stack extension", got, stack_extend(op, m, Domain::whole())));
    LAW_TRY(require(is_simplicial_stack(got), spec.to_string() + " output is not a simplicial stack"));
  }
  return std::nullopt;
}

Result gray_filter_superposition(const ComplexPtr& c, Rng& rng) {
  auto m = random::random_stack(rng, c, kSmall);
  for (const auto& spec : sample_specs()) {
    auto op = [spec](const SimplexSet& x) { return apply_filter(spec, x); };
    LAW_TRY(superposition(spec.to_string(), gray_filter(spec, m), m, op));
  }
  return std::nullopt;
}

// ------------------------------------------------------------- builders

ImageGrid random_image(Rng& rng, Value maxval) {
  std::uniform_int_distribution<std::size_t> side(1, 6);
  std::uniform_int_distribution<Value> px(0, maxval);
  ImageGrid g;
  g.width = side(rng);
  g.height = side(rng);
  g.maxval = maxval;
  g.pixels.resize(g.width * g.height);
  for (auto& p : g.pixels) p = px(rng);
  return g;
}

Result ingestion_commutes(const ComplexPtr&, Rng& rng) {
  auto g = random_image(rng, 7);
  auto m = stack_from_image(g);
  for (Value t = 0; t <= 7; ++t) {
    // the two paths build separate (equal) ambient complexes
    auto bin = binary_complex_from_image(g, t);
    auto thr = threshold(m, t);
    if (bin.members() != thr.members()) {
      return "binary vs gray ingestion at level " + std::to_string(t) + ": " + show(bin) +
             " vs " + show(thr);
    }
  }
  return std::nullopt;
}

Result grid_structure(const ComplexPtr&, Rng& rng) {
  auto g = random_image(rng, 1);
  auto c = complex_from_image_structure(g);
  LAW_TRY(require(oracle::is_subcomplex(SimplexSet::full(c)), "grid complex not closed"));
  for (std::size_t r = 1; r + 1 < g.height; ++r) {
    for (std::size_t col = 1; col + 1 < g.width; ++col) {
      const auto id = static_cast<VertexId>(r * g.width + col);
      auto v = SimplexSet::of(c, {Simplex{id}});
      auto st = oracle::star(v);
      if (st.size(1) != 6 || st.size(2) != 6) {
        return "interior vertex " + std::to_string(id) + " has " + std::to_string(st.size(1)) +
               " edges and " + std::to_string(st.size(2)) + " triangles";
      }
    }
  }
  return std::nullopt;
}

Result vertex_propagation(const ComplexPtr& c, Rng& rng) {
  auto v = random::random_map(rng, c, kSmall, Domain::slice(0));
  auto m = stack_from_vertex_values(v);
  LAW_TRY(require(is_simplicial_stack(m), "propagated values are not a simplicial stack"));
  for (const auto& s : c->all_simplices()) {
    Value want = kSmall.max;
    for (VertexId id : s.vertices()) want = std::min(want, v.at(Simplex{id}));
    if (m.at(s) != want) return "simplex " + s.to_string() + " is not the min of its vertices";
  }
  return std::nullopt;
}

Result text_roundtrip(const ComplexPtr& c, Rng& rng) {
  auto m = random::random_map(rng, c, ValueRange{0, 255}, Domain::whole());
  std::ostringstream first;
  io::write_text_complex(first, m);
  std::istringstream in(first.str());
  auto back = io::read_text_complex(in);
  std::ostringstream second;
  io::write_text_complex(second, back.value_map(ValueRange{0, 255}));
  LAW_TRY(require(first.str() == second.str(), "weighted text round-trip not byte-exact"));
  std::ostringstream plain;
  io::write_text_complex(plain, *c);
  std::istringstream pin(plain.str());
  auto pback = io::read_text_complex(pin);
  std::ostringstream plain2;
  io::write_text_complex(plain2, *pback.complex);
  LAW_TRY(require(plain.str() == plain2.str(), "plain text round-trip not byte-exact"));
  return std::nullopt;
}

Result image_roundtrip(const ComplexPtr&, Rng& rng) {
  for (Value maxval : {1, 255, 1000}) {
    auto g = random_image(rng, maxval);
    std::ostringstream out;
    if (maxval == 1) {
      io::write_pbm(out, g);
    } else {
      io::write_pgm(out, g);
    }
    std::istringstream in(out.str());
    auto back = io::read_netpbm(in);
    LAW_TRY(require(back == g, "netpbm round-trip changed the image (maxval " +
                                   std::to_string(maxval) + ")"));
    std::ostringstream again;
    if (maxval == 1) {
      io::write_pbm(again, back);
    } else {
      io::write_pgm(again, back);
    }
    LAW_TRY(require(again.str() == out.str(), "netpbm bytes differ after round-trip"));
  }
  return std::nullopt;
}

std::vector<Law> make_registry() {
  return {
      {"closure_star_oracle", "core", closure_star_oracle},
      {"closure_star_axioms", "core", closure_star_axioms},
      {"interior_adjunction", "core", interior_adjunction},
      {"subcomplex_star_duality", "core", subcomplex_star_duality},
      {"definition_oracle", "dimensional", definition_oracle},
      {"star_closure_forms", "dimensional", star_closure_forms},
      {"dimensional_adjunction", "dimensional", dimensional_adjunction},
      {"dimensional_duality", "dimensional", dimensional_duality},
      {"composition_collapse", "dimensional", composition_collapse},
      {"higher_intermediary", "dimensional", higher_intermediary},
      {"lower_intermediary_inclusions", "dimensional", lower_intermediary_inclusions},
      {"lower_intermediary_equalities", "dimensional", lower_intermediary_equalities},
      {"star_closure_recovery", "dimensional", star_closure_recovery},
      {"dimensional_monotone", "dimensional", dimensional_monotone},
      {"graph_compat", "dimensional", graph_compat},
      {"stack_superposition", "weighted", stack_superposition},
      {"closed_forms", "weighted", closed_forms},
      {"gray_duality", "weighted", gray_duality},
      {"gray_monotone", "weighted", gray_monotone},
      {"stack_predicates", "weighted", stack_predicates},
      {"filter_oracle", "filters", filter_oracle},
      {"filter_adjunction", "filters", filter_adjunction},
      {"slice_locality", "filters", slice_locality},
      {"opening_closing", "filters", opening_closing},
      {"granulometry", "filters", granulometry},
      {"asf_absorption", "filters", asf_absorption},
      {"lower_variant_equivalence", "filters", lower_variant_equivalence},
      {"filter_outputs_subcomplex", "filters", filter_outputs_subcomplex},
      {"gray_filter_extension", "filters", gray_filter_extension},
      {"gray_filter_superposition", "filters", gray_filter_superposition},
      {"ingestion_commutes", "builders", ingestion_commutes},
      {"grid_structure", "builders", grid_structure},
      {"vertex_propagation", "builders", vertex_propagation},
      {"text_roundtrip", "builders", text_roundtrip},
      {"image_roundtrip", "builders", image_roundtrip},
  };
}

void quiet(std::string_view) {}

struct QuietWarnings {
  WarningHandler previous = set_warning_handler(quiet);
  ~QuietWarnings() { set_warning_handler(previous); }
};

std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ull;
  return h;
}

std::uint64_t splitmix(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

bool skipped(const Law& law, const std::vector<std::string>& skip) {
  return std::find(skip.begin(), skip.end(), law.name) != skip.end() ||
         std::find(skip.begin(), skip.end(), law.group) != skip.end();
}

}  // namespace

const std::vector<Law>& registry() {
  static const std::vector<Law> laws = make_registry();
  return laws;
}

std::uint64_t case_seed(std::uint64_t seed, int index) noexcept {
  return splitmix(seed ^ splitmix(static_cast<std::uint64_t>(index)));
}

std::optional<std::string> evaluate(const Law& law, const ComplexPtr& c, std::uint64_t seed) {
  QuietWarnings guard;
  Rng rng(splitmix(seed ^ fnv1a(law.name)));
  try {
    return law.fn(c, rng);
  } catch (const std::exception& e) {
    return std::string("threw ") + e.what();
  }
}

ComplexPtr minimize(const Law& law, ComplexPtr c, std::uint64_t seed) {
  bool progress = true;
  while (progress) {
    progress = false;
    auto all = c->all_simplices();
    if (all.size() <= 1) break;
    for (const auto& m : c->maximal_simplices()) {
      std::vector<Simplex> rest;
      rest.reserve(all.size() - 1);
      for (const auto& s : all) {
        if (s != m) rest.push_back(s);
      }
      auto smaller = Complex::build(rest, Closure::Require);
      if (evaluate(law, smaller, seed)) {
        c = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return c;
}

SuiteReport run_suite(const SuiteOptions& opts) {
  SuiteReport report;
  report.cases = opts.cases;
  random::ComplexOptions gen;
  gen.max_vertices = opts.max_vertices;
  gen.max_dim = opts.max_dim;
  std::vector<const Law*> active;
  for (const auto& law : registry()) {
    if (!skipped(law, opts.skip)) active.push_back(&law);
  }
  report.laws = static_cast<int>(active.size());
  std::map<std::string, std::size_t> slot;
  std::vector<std::uint64_t> first_seed;
  for (int k = 0; k < opts.cases; ++k) {
    const std::uint64_t s = case_seed(opts.seed, k);
    Rng rng(s);
    auto c = random::random_complex(rng, gen);
    for (const Law* law : active) {
      ++report.evaluations;
      auto r = evaluate(*law, c, s);
      if (!r) continue;
      auto [it, fresh] = slot.try_emplace(law->name, report.failures.size());
      if (fresh) {
        report.failures.push_back({law->name, k, 0, *r, c});
        first_seed.push_back(s);
      }
      ++report.failures[it->second].count;
    }
  }
  if (opts.minimize) {
    for (std::size_t f = 0; f < report.failures.size(); ++f) {
      auto& fail = report.failures[f];
      const Law& law = *std::find_if(registry().begin(), registry().end(),
                                     [&](const Law& l) { return l.name == fail.law; });
      fail.witness = minimize(law, fail.witness, first_seed[f]);
      if (auto r = evaluate(law, fail.witness, first_seed[f])) fail.detail = *r;
    }
  }
  return report;
}

void print_report(std::ostream& out, const SuiteReport& report) {
  out << report.laws << " laws x " << report.cases << " cases, " << report.evaluations
      << " evaluations\n";
  if (report.ok()) {
    out << "all laws hold\n";
    return;
  }
  for (const auto& f : report.failures) {
    out << "FAIL " << f.law << ": " << f.count << " of " << report.cases
        << " cases, first at case " << f.first_case << "\n  " << f.detail
        << "\n  counterexample:\n";
    std::ostringstream text;
    io::write_text_complex(text, *f.witness);
    std::istringstream lines(text.str());
    for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
  }
}

}  // namespace scmorph::check
