#include "scmorph/builders.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "incidence_kernels.hpp"
#include "scmorph/error.hpp"

namespace scmorph {

ComplexPtr complex_from_image_structure(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw Error(Errc::EmptyInput, "image has no pixels");
  auto id = [width](std::size_t r, std::size_t c) {
    return static_cast<VertexId>(r * width + c);
  };
  std::vector<Simplex> gens;
  gens.reserve(width * height * 3);
  for (std::size_t r = 0; r < height; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      gens.push_back(Simplex{id(r, c)});
      if (c + 1 < width) gens.push_back(Simplex{id(r, c), id(r, c + 1)});
      if (r + 1 < height) gens.push_back(Simplex{id(r, c), id(r + 1, c)});
      if (r + 1 < height && c + 1 < width) {
        gens.push_back(Simplex{id(r, c), id(r + 1, c + 1)});
        gens.push_back(Simplex{id(r, c), id(r, c + 1), id(r + 1, c + 1)});
        gens.push_back(Simplex{id(r, c), id(r + 1, c), id(r + 1, c + 1)});
      }
    }
  }
  return Complex::build(gens, Closure::Require);
}

SimplexSet binary_complex_from_image(const ImageGrid& g, Value level) {
  auto c = complex_from_image_structure(g);
  SimplexSet out(c);
  auto v0 = out.slice_bits(0);
  for (Index i = 0; i < v0.size(); ++i) v0[i] = g.pixels[c->simplex(0, i)[0]] >= level;
  for (int d = 0; d < c->dim(); ++d) {
    auto up = detail::step_up<std::uint8_t>(*c, d, out.slice_bits(d), 1, detail::And{});
    std::copy(up.begin(), up.end(), out.slice_bits(d + 1).begin());
  }
  return out;
}

ValueMap stack_from_vertex_values(const ComplexPtr& c, std::span<const Value> vertex_values,
                                  ValueRange range) {
  ValueMap v(c, range, Domain::slice(0));
  v.assign_slice(0, std::vector<Value>(vertex_values.begin(), vertex_values.end()));
  return stack_from_vertex_values(v);
}

ValueMap stack_from_vertex_values(const ValueMap& vertex_map) {
  if (!vertex_map.domain().covers(0)) {
    throw Error(Errc::DomainMismatch, "vertex values must cover C_0");
  }
  const Complex& c = vertex_map.ambient();
  ValueMap out(vertex_map.ambient_ptr(), vertex_map.range(), Domain::whole());
  auto v0 = vertex_map.slice_values(0);
  out.assign_slice(0, std::vector<Value>(v0.begin(), v0.end()));
  for (int d = 0; d < c.dim(); ++d) {
    out.assign_slice(d + 1, detail::step_up<Value>(c, d, out.slice_values(d),
                                                   vertex_map.range().max, detail::Min{}));
  }
  return out;
}

ValueMap stack_from_image(const ImageGrid& g) {
  auto c = complex_from_image_structure(g);
  return stack_from_vertex_values(c, g.pixels, ValueRange::make(0, g.maxval));
}

ImageGrid vertex_values_to_image(const ValueMap& m, std::size_t width, std::size_t height) {
  const Complex& c = m.ambient();
  if (!m.domain().covers(0)) throw Error(Errc::DomainMismatch, "map does not cover C_0");
  if (c.size(0) != width * height) {
    throw Error(Errc::ShapeMismatch, std::to_string(c.size(0)) + " vertices for a " +
                                         std::to_string(width) + "x" + std::to_string(height) +
                                         " image");
  }
  ImageGrid g{width, height, m.range().max, std::vector<Value>(width * height)};
  auto vals = m.slice_values(0);
  for (Index i = 0; i < vals.size(); ++i) {
    const VertexId id = c.simplex(0, i)[0];
    if (id >= g.pixels.size()) {
      throw Error(Errc::ShapeMismatch, "vertex id " + std::to_string(id) + " outside the grid");
    }
    g.pixels[id] = vals[i];
  }
  return g;
}

ComplexPtr mesh_to_complex(const MeshSurface& mesh) {
  if (mesh.vertex_count == 0) throw Error(Errc::EmptyInput, "mesh has no vertices");
  std::vector<Simplex> gens;
  gens.reserve(mesh.vertex_count + mesh.triangles.size());
  for (std::size_t v = 0; v < mesh.vertex_count; ++v) gens.push_back(Simplex{static_cast<VertexId>(v)});
  for (const auto& t : mesh.triangles) {
    for (VertexId v : t) {
      if (v >= mesh.vertex_count) {
        throw Error(Errc::ParseError, "triangle index " + std::to_string(v) + " out of range");
      }
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(Errc::ParseError, "degenerate triangle");
    }
    gens.push_back(Simplex{t[0], t[1], t[2]});
  }
  return Complex::build(gens, Closure::Auto);
}

std::vector<Value> quantize_values(std::span<const double> raw, double lo, double hi,
                                   ValueRange range) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(Errc::DegenerateInterval, "need lo < hi");
  }
  const double span = static_cast<double>(range.max) - range.min;
  std::vector<Value> out;
  out.reserve(raw.size());
  for (double x : raw) {
    if (!std::isfinite(x)) throw Error(Errc::ValueOutOfRange, "non-finite input value");
    double t = (x - lo) / (hi - lo);
    t = std::clamp(t, 0.0, 1.0);
    out.push_back(static_cast<Value>(std::floor(range.min + t * span + 0.5)));
  }
  return out;
}

}  // namespace scmorph
