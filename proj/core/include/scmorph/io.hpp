#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "scmorph/builders.hpp"
#include "scmorph/weighted.hpp"

namespace scmorph::io {

// ---- text complex format --------------------------------------------------
//
//   ascx n=<dim> count=<simplices>      header, optional on read
//   # comment                           '#' starts a comment anywhere
//   v1 v2 ... vk [= value]              one simplex per line, ascending ids
//
// Either every data line carries a value or none does. Without values the
// lines are closed automatically; with values every face must be listed.
// The writer emits dimension-major, lexicographic order.

struct TextComplex {
  ComplexPtr complex;
  /// Raw per-dimension values indexed like the complex slices; empty when
  /// the file has none.
  std::vector<std::vector<Value>> values;

  bool has_values() const noexcept { return !values.empty(); }
  /// Throws ValueOutOfRange when a value is outside `range`.
  ValueMap value_map(ValueRange range) const;
  /// Smallest and largest stored value (requires has_values()).
  std::pair<Value, Value> value_bounds() const;
};

TextComplex read_text_complex(std::istream& in);
TextComplex read_text_complex(const std::filesystem::path& path);
void write_text_complex(std::ostream& out, const Complex& c);
void write_text_complex(std::ostream& out, const ValueMap& m);
void write_text_complex(const std::filesystem::path& path, const ValueMap& m);
void write_text_complex(const std::filesystem::path& path, const Complex& c);

// ---- netpbm ---------------------------------------------------------------
//
// Reads P1/P2/P4/P5 (16-bit big-endian samples when maxval > 255). Bitmaps
// load with maxval 1 and pixel value 1 for black (set) bits.

ImageGrid read_netpbm(std::istream& in);
ImageGrid read_netpbm(const std::filesystem::path& path);
/// Binary greymap (P5).
void write_pgm(std::ostream& out, const ImageGrid& g);
/// Packed bitmap (P4); every pixel must be 0 or 1 (ValueOutOfRange).
void write_pbm(std::ostream& out, const ImageGrid& g);
/// P4 when the extension is .pbm, P5 otherwise.
void write_image(const std::filesystem::path& path, const ImageGrid& g);

// ---- OFF meshes and vertex values -------------------------------------------

/// ASCII OFF with triangular faces only (NonTriangleFace otherwise).
MeshSurface read_off(std::istream& in);
MeshSurface read_off(const std::filesystem::path& path);

/// One number per line; blank lines and '#' comments ignored.
std::vector<double> read_vertex_values(std::istream& in);
std::vector<double> read_vertex_values(const std::filesystem::path& path);

}  // namespace scmorph::io
