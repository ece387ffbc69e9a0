#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace scmorph {

using VertexId = std::uint32_t;

/// A finite nonempty set of vertices, stored as a strictly ascending
/// sequence so that equality and hashing are O(k).
class Simplex {
 public:
  /// Sorts the input; throws InvalidSimplex on an empty or repeated vertex.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices)
      : Simplex(std::vector<VertexId>(vertices)) {}

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  VertexId operator[](std::size_t i) const noexcept { return vertices_[i]; }

  /// True when every vertex of `other` is a vertex of this simplex.
  bool contains(const Simplex& other) const noexcept;

  /// The codimension-1 faces, in the order obtained by dropping vertex 0, 1, ...
  /// Empty for a vertex.
  std::vector<Simplex> facets() const;

  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  struct Trusted {};
  Simplex(Trusted, std::vector<VertexId> sorted) : vertices_(std::move(sorted)) {}

  std::vector<VertexId> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace scmorph
