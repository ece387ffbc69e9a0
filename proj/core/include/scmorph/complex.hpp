#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "scmorph/simplex.hpp"

namespace scmorph {

/// Position of a simplex inside its dimension slice of a Complex.
using Index = std::uint32_t;

class Complex;
using ComplexPtr = std::shared_ptr<const Complex>;

enum class Closure {
  Auto,     ///< add every nonempty subset of the generators
  Require,  ///< reject generators that are not subset-closed
};

/// The ambient simplicial complex. Immutable after construction; every
/// simplex is addressed by (dimension, index) with indices following the
/// lexicographic order of the vertex sequences. Only codimension-1
/// face/coface links are stored.
class Complex {
 public:
  /// Throws EmptyInput, or NotClosed when `mode` is Require and a face is
  /// missing. Duplicate generators are merged.
  static ComplexPtr build(std::span<const Simplex> generators, Closure mode);
  static ComplexPtr build(std::initializer_list<Simplex> generators, Closure mode) {
    return build(std::span<const Simplex>(generators.begin(), generators.size()), mode);
  }

  /// Greatest dimension present (the complex is never empty).
  int dim() const noexcept { return static_cast<int>(slices_.size()) - 1; }
  std::size_t size(int d) const noexcept {
    return d >= 0 && d <= dim() ? slices_[d].simplices.size() : 0;
  }
  std::size_t total_size() const noexcept;

  const Simplex& simplex(int d, Index i) const { return slices_[d].simplices[i]; }
  std::span<const Simplex> simplices(int d) const { return slices_[d].simplices; }
  std::optional<Index> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Indices (in dimension d-1) of the facets of simplex (d, i).
  std::span<const Index> faces(int d, Index i) const noexcept {
    const auto& sl = slices_[d];
    return {sl.face_idx.data() + sl.face_off[i], sl.face_idx.data() + sl.face_off[i + 1]};
  }
  /// Indices (in dimension d+1) of the simplices having (d, i) as a facet.
  std::span<const Index> cofaces(int d, Index i) const noexcept {
    const auto& sl = slices_[d];
    return {sl.coface_idx.data() + sl.coface_off[i],
            sl.coface_idx.data() + sl.coface_off[i + 1]};
  }

  /// Every simplex, ordered by dimension then lexicographically.
  std::vector<Simplex> all_simplices() const;
  /// Simplices not contained in any other simplex.
  std::vector<Simplex> maximal_simplices() const;

 private:
  struct Slice {
    std::vector<Simplex> simplices;
    std::unordered_map<Simplex, Index, SimplexHash> index;
    std::vector<std::uint32_t> face_off{0};
    std::vector<Index> face_idx;
    std::vector<std::uint32_t> coface_off;
    std::vector<Index> coface_idx;
  };

  Complex() = default;

  std::vector<Slice> slices_;
};

}  // namespace scmorph
