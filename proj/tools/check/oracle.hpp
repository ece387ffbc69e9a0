#pragma once

// Brute-force reference implementations. Everything here works from vertex
// sets and subset scans only; nothing touches the incidence links or the
// iterated kernels used by the library.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "scmorph/simplex_set.hpp"
#include "scmorph/weighted.hpp"

namespace scmorph::oracle {

inline std::vector<Simplex> nonempty_subsets(const Simplex& s) {
  std::vector<Simplex> out;
  const auto v = s.vertices();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << v.size()); ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (mask >> b & 1) sub.push_back(v[b]);
    }
    out.emplace_back(std::move(sub));
  }
  return out;
}

inline SimplexSet closure(const SimplexSet& x) {
  SimplexSet out(x.ambient_ptr());
  for (const auto& m : x.members()) {
    for (const auto& s : nonempty_subsets(m)) out.insert(s);
  }
  return out;
}

inline SimplexSet star(const SimplexSet& x) {
  SimplexSet out(x.ambient_ptr());
  const auto members = x.members();
  for (const auto& s : x.ambient().all_simplices()) {
    for (const auto& m : members) {
      if (s.contains(m)) {
        out.insert(s);
        break;
      }
    }
  }
  return out;
}

inline SimplexSet complement(const SimplexSet& x) {
  SimplexSet out(x.ambient_ptr());
  for (const auto& s : x.ambient().all_simplices()) {
    if (!x.contains(s)) out.insert(s);
  }
  return out;
}

/// {x : every nonempty subset of x is in X}
inline SimplexSet interior(const SimplexSet& x) {
  SimplexSet out(x.ambient_ptr());
  for (const auto& s : x.ambient().all_simplices()) {
    const auto subs = nonempty_subsets(s);
    if (std::all_of(subs.begin(), subs.end(), [&](const Simplex& f) { return x.contains(f); })) {
      out.insert(s);
    }
  }
  return out;
}

inline bool is_subcomplex(const SimplexSet& x) {
  for (const auto& m : x.members()) {
    for (const auto& f : nonempty_subsets(m)) {
      if (!x.contains(f)) return false;
    }
  }
  return true;
}

inline SimplexSet slice(const SimplexSet& x, int d) {
  return SimplexSet::of(x.ambient_ptr(), x.members(d));
}

// Dimensional operators straight from their set-builder definitions.

inline SimplexSet delta_up(int i, int j, const SimplexSet& x) {
  SimplexSet out(x.ambient_ptr());
  const auto xs = x.members(i);
  for (const auto& s : x.ambient().simplices(j)) {
    if (std::any_of(xs.begin(), xs.end(), [&](const Simplex& y) { return s.contains(y); })) {
      out.insert(s);
    }
  }
  return out;
}

inline SimplexSet epsilon_up(int i, int j, const SimplexSet& x) {
  SimplexSet out(x.ambient_ptr());
  const auto ci = x.ambient().simplices(i);
  for (const auto& s : x.ambient().simplices(j)) {
    if (std::all_of(ci.begin(), ci.end(),
                    [&](const Simplex& y) { return !s.contains(y) || x.contains(y); })) {
      out.insert(s);
    }
  }
  return out;
}

inline SimplexSet delta_down(int j, int i, const SimplexSet& y) {
  SimplexSet out(y.ambient_ptr());
  const auto ys = y.members(j);
  for (const auto& s : y.ambient().simplices(i)) {
    if (std::any_of(ys.begin(), ys.end(), [&](const Simplex& z) { return z.contains(s); })) {
      out.insert(s);
    }
  }
  return out;
}

inline SimplexSet epsilon_down(int j, int i, const SimplexSet& y) {
  SimplexSet out(y.ambient_ptr());
  const auto cj = y.ambient().simplices(j);
  for (const auto& s : y.ambient().simplices(i)) {
    if (std::all_of(cj.begin(), cj.end(),
                    [&](const Simplex& z) { return !z.contains(s) || y.contains(z); })) {
      out.insert(s);
    }
  }
  return out;
}

// Compositions of the brute-force operators following the definitions of
// the subcomplex dilation/erosion.

inline SimplexSet dilate_g(const SimplexSet& x) {
  const int n = x.ambient().dim();
  SimplexSet out(x.ambient_ptr());
  for (int i = 0; i < n; ++i) out |= oracle::delta_down(i + 1, i, oracle::delta_up(i, i + 1, oracle::slice(x, i)));
  out |= oracle::delta_up(n - 1, n, oracle::delta_down(n, n - 1, oracle::slice(x, n)));
  return out;
}

inline SimplexSet erode_g(const SimplexSet& x) {
  const int n = x.ambient().dim();
  SimplexSet out(x.ambient_ptr());
  for (int i = 0; i < n; ++i) out |= oracle::epsilon_down(i + 1, i, oracle::epsilon_up(i, i + 1, oracle::slice(x, i)));
  out |= oracle::epsilon_up(n - 1, n, oracle::epsilon_down(n, n - 1, oracle::slice(x, n)));
  return oracle::interior(out);
}

inline SimplexSet dilate_s(const SimplexSet& x) {
  const int n = x.ambient().dim();
  SimplexSet out(x.ambient_ptr());
  for (int i = 1; i <= n; ++i) out |= oracle::delta_up(i - 1, i, oracle::delta_down(i, i - 1, oracle::slice(x, i)));
  out |= oracle::delta_down(1, 0, oracle::delta_up(0, 1, oracle::slice(x, 0)));
  return out;
}

inline SimplexSet erode_s(const SimplexSet& x) {
  const int n = x.ambient().dim();
  SimplexSet out(x.ambient_ptr());
  for (int i = 1; i <= n; ++i) out |= oracle::epsilon_up(i - 1, i, oracle::epsilon_down(i, i - 1, oracle::slice(x, i)));
  out |= oracle::epsilon_down(1, 0, oracle::epsilon_up(0, 1, oracle::slice(x, 0)));
  return oracle::interior(out);
}

// Grayscale closed forms by direct scan. Empty max -> k_min, empty min -> k_max.

enum class Extremum { Max, Min };

inline ValueMap gray_scan(const ValueMap& m, int from, int to, Extremum ext) {
  const Complex& c = m.ambient();
  const auto r = m.range();
  ValueMap out(m.ambient_ptr(), r, Domain::slice(to));
  for (Index x = 0; x < c.size(to); ++x) {
    const Simplex& sx = c.simplex(to, x);
    Value acc = ext == Extremum::Max ? r.min : r.max;
    for (Index y = 0; y < c.size(from); ++y) {
      const Simplex& sy = c.simplex(from, y);
      const bool related = from > to ? sy.contains(sx) : sx.contains(sy);
      if (!related) continue;
      const Value v = m.at(from, y);
      acc = ext == Extremum::Max ? std::max(acc, v) : std::min(acc, v);
    }
    out.set(to, x, acc);
  }
  return out;
}

/// Every threshold is a subcomplex (checked by subset enumeration).
inline bool thresholds_are_subcomplexes(const ValueMap& m) {
  for (Value k = m.range().min; k <= m.range().max; ++k) {
    if (!oracle::is_subcomplex(threshold(m, k))) return false;
  }
  return true;
}

/// Every threshold is a star: its complement is subset-closed.
inline bool thresholds_are_stars(const ValueMap& m) {
  for (Value k = m.range().min; k <= m.range().max; ++k) {
    if (!oracle::is_subcomplex(oracle::complement(threshold(m, k)))) return false;
  }
  return true;
}

/// Closed edge-neighbourhood max (or min) over vertex values.
inline std::vector<Value> neighbourhood_extremum(const ValueMap& f, Extremum ext) {
  const Complex& c = f.ambient();
  std::vector<Value> out(c.size(0));
  for (Index v = 0; v < c.size(0); ++v) {
    const VertexId id = c.simplex(0, v)[0];
    Value acc = f.at(0, v);
    for (Index w = 0; w < c.size(0); ++w) {
      const VertexId other = c.simplex(0, w)[0];
      if (other == id) continue;
      if (!c.contains(Simplex{id, other})) continue;
      acc = ext == Extremum::Max ? std::max(acc, f.at(0, w)) : std::min(acc, f.at(0, w));
    }
    out[v] = acc;
  }
  return out;
}

}  // namespace scmorph::oracle
