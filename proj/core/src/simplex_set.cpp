#include "scmorph/simplex_set.hpp"

#include <algorithm>

#include "scmorph/error.hpp"

namespace scmorph {

SimplexSet::SimplexSet(ComplexPtr ambient) : ambient_(std::move(ambient)) {
  if (!ambient_) throw Error(Errc::EmptyInput, "simplex set needs an ambient complex");
  bits_.resize(static_cast<std::size_t>(ambient_->dim()) + 1);
  for (int d = 0; d <= ambient_->dim(); ++d) bits_[d].assign(ambient_->size(d), 0);
}

SimplexSet SimplexSet::full(ComplexPtr ambient) {
  SimplexSet s(std::move(ambient));
  for (auto& b : s.bits_) std::fill(b.begin(), b.end(), 1);
  return s;
}

SimplexSet SimplexSet::of(ComplexPtr ambient, std::span<const Simplex> members) {
  SimplexSet s(std::move(ambient));
  for (const auto& m : members) s.insert(m);
  return s;
}

bool SimplexSet::contains(const Simplex& s) const {
  auto idx = ambient_->index_of(s);
  return idx && bits_[s.dim()][*idx];
}

void SimplexSet::insert(const Simplex& s) {
  auto idx = ambient_->index_of(s);
  if (!idx) throw Error(Errc::NotInAmbient, s.to_string() + " is not in the ambient complex");
  bits_[s.dim()][*idx] = 1;
}

std::size_t SimplexSet::size(int d) const noexcept {
  if (d < 0 || d >= static_cast<int>(bits_.size())) return 0;
  return static_cast<std::size_t>(std::count(bits_[d].begin(), bits_[d].end(), 1));
}

std::size_t SimplexSet::size() const noexcept {
  std::size_t n = 0;
  for (int d = 0; d < static_cast<int>(bits_.size()); ++d) n += size(d);
  return n;
}

std::optional<int> SimplexSet::pure_dim() const noexcept {
  std::optional<int> found;
  for (int d = 0; d < static_cast<int>(bits_.size()); ++d) {
    if (size(d) == 0) continue;
    if (found) return std::nullopt;
    found = d;
  }
  return found;
}

std::vector<Simplex> SimplexSet::members(int d) const {
  std::vector<Simplex> out;
  if (d < 0 || d >= static_cast<int>(bits_.size())) return out;
  for (Index i = 0; i < bits_[d].size(); ++i) {
    if (bits_[d][i]) out.push_back(ambient_->simplex(d, i));
  }
  return out;
}

std::vector<Simplex> SimplexSet::members() const {
  std::vector<Simplex> out;
  for (int d = 0; d < static_cast<int>(bits_.size()); ++d) {
    auto m = members(d);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

void SimplexSet::require_same_ambient(const SimplexSet& other) const {
  if (ambient_ != other.ambient_) {
    throw Error(Errc::AmbientMismatch, "sets live in different ambient complexes");
  }
}

bool SimplexSet::is_subset_of(const SimplexSet& other) const {
  require_same_ambient(other);
  for (std::size_t d = 0; d < bits_.size(); ++d) {
    for (std::size_t i = 0; i < bits_[d].size(); ++i) {
      if (bits_[d][i] && !other.bits_[d][i]) return false;
    }
  }
  return true;
}

SimplexSet& SimplexSet::operator|=(const SimplexSet& other) {
  require_same_ambient(other);
  for (std::size_t d = 0; d < bits_.size(); ++d) {
    for (std::size_t i = 0; i < bits_[d].size(); ++i) bits_[d][i] |= other.bits_[d][i];
  }
  return *this;
}

SimplexSet& SimplexSet::operator&=(const SimplexSet& other) {
  require_same_ambient(other);
  for (std::size_t d = 0; d < bits_.size(); ++d) {
    for (std::size_t i = 0; i < bits_[d].size(); ++i) bits_[d][i] &= other.bits_[d][i];
  }
  return *this;
}

SimplexSet& SimplexSet::operator-=(const SimplexSet& other) {
  require_same_ambient(other);
  for (std::size_t d = 0; d < bits_.size(); ++d) {
    for (std::size_t i = 0; i < bits_[d].size(); ++i) {
      bits_[d][i] = bits_[d][i] && !other.bits_[d][i];
    }
  }
  return *this;
}

bool operator==(const SimplexSet& a, const SimplexSet& b) {
  return a.ambient_ == b.ambient_ && a.bits_ == b.bits_;
}

SimplexSet dim_slice(const SimplexSet& x, int i) {
  const Complex& c = x.ambient();
  if (i < 0 || i > c.dim()) {
    throw Error(Errc::DimOutOfRange, "dimension " + std::to_string(i) + " outside [0, " +
                                         std::to_string(c.dim()) + "]");
  }
  SimplexSet out(x.ambient_ptr());
  auto src = x.slice_bits(i);
  std::copy(src.begin(), src.end(), out.slice_bits(i).begin());
  return out;
}

SimplexSet closure(const SimplexSet& x) {
  const Complex& c = x.ambient();
  SimplexSet out = x;
  for (int d = c.dim(); d >= 1; --d) {
    auto hi = out.slice_bits(d);
    auto lo = out.slice_bits(d - 1);
    for (Index i = 0; i < hi.size(); ++i) {
      if (!hi[i]) continue;
      for (Index f : c.faces(d, i)) lo[f] = 1;
    }
  }
  return out;
}

SimplexSet star(const SimplexSet& x) {
  const Complex& c = x.ambient();
  SimplexSet out = x;
  for (int d = 0; d < c.dim(); ++d) {
    auto lo = out.slice_bits(d);
    auto hi = out.slice_bits(d + 1);
    for (Index i = 0; i < lo.size(); ++i) {
      if (!lo[i]) continue;
      for (Index u : c.cofaces(d, i)) hi[u] = 1;
    }
  }
  return out;
}

SimplexSet complement(const SimplexSet& x) {
  return SimplexSet::full(x.ambient_ptr()) - x;
}

SimplexSet interior(const SimplexSet& x) { return complement(star(complement(x))); }

bool is_subcomplex(const SimplexSet& x) {
  const Complex& c = x.ambient();
  for (int d = 1; d <= c.dim(); ++d) {
    auto hi = x.slice_bits(d);
    auto lo = x.slice_bits(d - 1);
    for (Index i = 0; i < hi.size(); ++i) {
      if (!hi[i]) continue;
      for (Index f : c.faces(d, i)) {
        if (!lo[f]) return false;
      }
    }
  }
  return true;
}

bool is_star(const SimplexSet& x) {
  const Complex& c = x.ambient();
  for (int d = 0; d < c.dim(); ++d) {
    auto lo = x.slice_bits(d);
    auto hi = x.slice_bits(d + 1);
    for (Index i = 0; i < lo.size(); ++i) {
      if (!lo[i]) continue;
      for (Index u : c.cofaces(d, i)) {
        if (!hi[u]) return false;
      }
    }
  }
  return true;
}

}  // namespace scmorph
