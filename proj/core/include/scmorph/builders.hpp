#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "scmorph/simplex_set.hpp"
#include "scmorph/weighted.hpp"

namespace scmorph {

/// Row-major raster. `maxval` is the largest representable intensity
/// (1 for bitmaps, 255 for 8-bit greymaps).
struct ImageGrid {
  std::size_t width = 0;
  std::size_t height = 0;
  Value maxval = 255;
  std::vector<Value> pixels;

  Value at(std::size_t row, std::size_t col) const { return pixels[row * width + col]; }
  friend bool operator==(const ImageGrid&, const ImageGrid&) = default;
};

/// Vertex per pixel (id = row * width + col). Each pixel is joined to its
/// 4-neighbours and to the (+1,+1) / (-1,-1) diagonal neighbours, and each
/// unit square is split along that diagonal into two triangles, so interior
/// vertices have 6 edges and 6 triangles. Border vertices have fewer.
ComplexPtr complex_from_image_structure(std::size_t width, std::size_t height);
inline ComplexPtr complex_from_image_structure(const ImageGrid& g) {
  return complex_from_image_structure(g.width, g.height);
}

/// Largest subcomplex whose vertices are the pixels with intensity >= level.
SimplexSet binary_complex_from_image(const ImageGrid& g, Value level);

/// Gives each simplex the minimum of its vertex values; the result is always
/// a simplicial stack. `vertex_values` is indexed like C_0 (ascending id).
ValueMap stack_from_vertex_values(const ComplexPtr& c, std::span<const Value> vertex_values,
                                  ValueRange range);
/// Same, from a map on C_0.
ValueMap stack_from_vertex_values(const ValueMap& vertex_map);

/// Grayscale image ingestion: stack_from_vertex_values over the image grid
/// with K = [0, maxval].
ValueMap stack_from_image(const ImageGrid& g);

/// Row-major extraction of vertex values. The map's complex must have
/// vertex ids 0 .. width*height-1 (ShapeMismatch otherwise).
ImageGrid vertex_values_to_image(const ValueMap& m, std::size_t width, std::size_t height);

struct MeshSurface {
  std::size_t vertex_count = 0;
  std::vector<std::array<VertexId, 3>> triangles;
  std::vector<double> vertex_values;  // optional, empty when absent
};

/// Closure of the triangles plus every vertex (isolated ones included).
/// Throws ParseError on out-of-range or repeated indices and EmptyInput on
/// a mesh without vertices.
ComplexPtr mesh_to_complex(const MeshSurface& mesh);

/// Affine map of [lo, hi] onto [range.min, range.max], rounding half up and
/// clamping. Throws DegenerateInterval unless lo < hi, and ValueOutOfRange
/// on non-finite inputs.
std::vector<Value> quantize_values(std::span<const double> raw, double lo, double hi,
                                   ValueRange range);

}  // namespace scmorph
