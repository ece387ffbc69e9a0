#include "scmorph/complex.hpp"

#include <algorithm>
#include <set>

#include "scmorph/error.hpp"

namespace scmorph {

namespace {

// All nonempty subsets of s, including s itself: 2^(d+1) - 1 simplices.
void add_all_faces(const Simplex& s, std::vector<std::set<Simplex>>& by_dim) {
  const auto verts = s.vertices();
  const std::size_t k = verts.size();
  const std::uint64_t limit = std::uint64_t{1} << k;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::vector<VertexId> sub;
    for (std::size_t b = 0; b < k; ++b) {
      if (mask & (std::uint64_t{1} << b)) sub.push_back(verts[b]);
    }
    const std::size_t d = sub.size() - 1;
    by_dim[d].insert(Simplex(std::move(sub)));
  }
}

}  // namespace

ComplexPtr Complex::build(std::span<const Simplex> generators, Closure mode) {
  if (generators.empty()) {
    throw Error(Errc::EmptyInput, "cannot build a complex without generators");
  }
  int top = 0;
  for (const auto& g : generators) top = std::max(top, g.dim());
  if (top >= 63) throw Error(Errc::DimOutOfRange, "simplex dimension too large");

  std::vector<std::set<Simplex>> by_dim(static_cast<std::size_t>(top) + 1);
  if (mode == Closure::Auto) {
    for (const auto& g : generators) add_all_faces(g, by_dim);
  } else {
    for (const auto& g : generators) by_dim[g.dim()].insert(g);
    for (int d = top; d >= 1; --d) {
      for (const auto& s : by_dim[d]) {
        for (auto& f : s.facets()) {
          if (!by_dim[d - 1].contains(f)) {
            throw Error(Errc::NotClosed,
                        "face " + f.to_string() + " of " + s.to_string() + " is missing");
          }
        }
      }
    }
  }

  auto cx = std::shared_ptr<Complex>(new Complex());
  cx->slices_.resize(by_dim.size());
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    auto& sl = cx->slices_[d];
    sl.simplices.assign(by_dim[d].begin(), by_dim[d].end());
    sl.index.reserve(sl.simplices.size());
    for (Index i = 0; i < sl.simplices.size(); ++i) sl.index.emplace(sl.simplices[i], i);
  }

  // Faces in CSR form, then cofaces by counting sort over the face lists.
  for (std::size_t d = 0; d < cx->slices_.size(); ++d) {
    auto& sl = cx->slices_[d];
    sl.face_off.assign(1, 0);
    if (d > 0) {
      const auto& lower = cx->slices_[d - 1];
      for (const auto& s : sl.simplices) {
        for (const auto& f : s.facets()) sl.face_idx.push_back(lower.index.at(f));
        sl.face_off.push_back(static_cast<std::uint32_t>(sl.face_idx.size()));
      }
    } else {
      sl.face_off.assign(sl.simplices.size() + 1, 0);
    }
  }
  for (std::size_t d = 0; d < cx->slices_.size(); ++d) {
    auto& sl = cx->slices_[d];
    sl.coface_off.assign(sl.simplices.size() + 1, 0);
    if (d + 1 >= cx->slices_.size()) continue;
    const auto& upper = cx->slices_[d + 1];
    for (Index f : upper.face_idx) ++sl.coface_off[f + 1];
    for (std::size_t i = 0; i < sl.simplices.size(); ++i) {
      sl.coface_off[i + 1] += sl.coface_off[i];
    }
    sl.coface_idx.resize(upper.face_idx.size());
    std::vector<std::uint32_t> fill(sl.coface_off.begin(), sl.coface_off.end() - 1);
    for (Index u = 0; u < upper.simplices.size(); ++u) {
      for (auto k = upper.face_off[u]; k < upper.face_off[u + 1]; ++k) {
        sl.coface_idx[fill[upper.face_idx[k]]++] = u;
      }
    }
  }
  return cx;
}

std::size_t Complex::total_size() const noexcept {
  std::size_t n = 0;
  for (const auto& sl : slices_) n += sl.simplices.size();
  return n;
}

std::optional<Index> Complex::index_of(const Simplex& s) const {
  const int d = s.dim();
  if (d > dim()) return std::nullopt;
  const auto& idx = slices_[d].index;
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> Complex::all_simplices() const {
  std::vector<Simplex> out;
  out.reserve(total_size());
  for (const auto& sl : slices_) out.insert(out.end(), sl.simplices.begin(), sl.simplices.end());
  return out;
}

std::vector<Simplex> Complex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dim(); ++d) {
    for (Index i = 0; i < size(d); ++i) {
      if (cofaces(d, i).empty()) out.push_back(simplex(d, i));
    }
  }
  return out;
}

}  // namespace scmorph
