#include "scmorph/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "scmorph/error.hpp"

namespace scmorph::io {

namespace {

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
T parse_int(std::string_view tok, std::size_t line_no) {
  T v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": bad integer '" + std::string(tok) + "'");
  }
  return v;
}

double parse_double(std::string_view tok, std::size_t line_no) {
  std::string s(tok);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw Error(Errc::ParseError,
                "line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

std::ifstream open_in(const std::filesystem::path& path, bool binary = false) {
  std::ifstream f(path, binary ? std::ios::binary : std::ios::in);
  if (!f) throw Error(Errc::IoError, "cannot open " + path.string());
  return f;
}

std::ofstream open_out(const std::filesystem::path& path, bool binary = false) {
  std::ofstream f(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
  if (!f) throw Error(Errc::IoError, "cannot write " + path.string());
  return f;
}

}  // namespace

// ---- text complex -----------------------------------------------------------

ValueMap TextComplex::value_map(ValueRange range) const {
  if (!has_values()) throw Error(Errc::DomainMismatch, "file carries no values");
  ValueMap m(complex, range, Domain::whole());
  for (int d = 0; d <= complex->dim(); ++d) m.assign_slice(d, values[d]);
  return m;
}

std::pair<Value, Value> TextComplex::value_bounds() const {
  Value lo = values.at(0).at(0), hi = lo;
  for (const auto& sl : values) {
    for (Value v : sl) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return {lo, hi};
}

TextComplex read_text_complex(std::istream& in) {
  std::map<Simplex, std::optional<Value>> entries;
  bool saw_header = false;
  std::optional<int> header_dim;
  std::optional<std::size_t> header_count;
  std::string line;
  std::size_t line_no = 0;
  bool saw_value = false, saw_plain = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = strip_comment(line);
    auto toks = split_ws(body);
    if (toks.empty()) continue;
    if (toks[0] == "ascx") {
      if (saw_header || !entries.empty()) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": misplaced header");
      }
      for (std::size_t k = 1; k < toks.size(); ++k) {
        auto eq = toks[k].find('=');
        if (eq == std::string_view::npos) {
          throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad header field");
        }
        auto key = toks[k].substr(0, eq);
        auto val = toks[k].substr(eq + 1);
        if (key == "n") header_dim = parse_int<int>(val, line_no);
        else if (key == "count") header_count = parse_int<std::size_t>(val, line_no);
        else throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": unknown header field");
      }
      saw_header = true;
      continue;
    }
    auto eq = body.find('=');
    auto verts_part = body.substr(0, eq);
    std::vector<VertexId> verts;
    for (auto tok : split_ws(verts_part)) verts.push_back(parse_int<VertexId>(tok, line_no));
    if (verts.empty()) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": no vertices");
    }
    if (!std::is_sorted(verts.begin(), verts.end()) ||
        std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": vertices must be strictly ascending");
    }
    std::optional<Value> value;
    if (eq != std::string_view::npos) {
      auto vtoks = split_ws(body.substr(eq + 1));
      if (vtoks.size() != 1) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected one value");
      }
      value = parse_int<Value>(vtoks[0], line_no);
      saw_value = true;
    } else {
      saw_plain = true;
    }
    if (saw_value && saw_plain) {
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": mixed weighted and unweighted lines");
    }
    if (!entries.emplace(Simplex(std::move(verts)), value).second) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": duplicate simplex");
    }
  }
  if (entries.empty()) throw Error(Errc::EmptyInput, "no simplices in complex file");

  std::vector<Simplex> gens;
  gens.reserve(entries.size());
  for (const auto& [s, v] : entries) gens.push_back(s);
  TextComplex out;
  out.complex = Complex::build(gens, saw_value ? Closure::Require : Closure::Auto);

  if (header_dim && *header_dim != out.complex->dim()) {
    throw Error(Errc::ParseError, "header says n=" + std::to_string(*header_dim) +
                                      " but the complex has dimension " +
                                      std::to_string(out.complex->dim()));
  }
  if (header_count && *header_count != out.complex->total_size()) {
    throw Error(Errc::ParseError, "header says count=" + std::to_string(*header_count) +
                                      " but the complex has " +
                                      std::to_string(out.complex->total_size()) + " simplices");
  }
  if (saw_value) {
    const auto& c = *out.complex;
    out.values.resize(static_cast<std::size_t>(c.dim()) + 1);
    for (int d = 0; d <= c.dim(); ++d) {
      out.values[d].reserve(c.size(d));
      for (const auto& s : c.simplices(d)) out.values[d].push_back(*entries.at(s));
    }
  }
  return out;
}

TextComplex read_text_complex(const std::filesystem::path& path) {
  auto f = open_in(path);
  return read_text_complex(f);
}

namespace {

void write_simplices(std::ostream& out, const Complex& c, const ValueMap* m) {
  out << "ascx n=" << c.dim() << " count=" << c.total_size() << '\n';
  for (int d = 0; d <= c.dim(); ++d) {
    for (Index i = 0; i < c.size(d); ++i) {
      const auto& s = c.simplex(d, i);
      for (std::size_t k = 0; k < s.size(); ++k) out << (k ? " " : "") << s[k];
      if (m) out << " = " << m->at(d, i);
      out << '\n';
    }
  }
}

}  // namespace

void write_text_complex(std::ostream& out, const Complex& c) { write_simplices(out, c, nullptr); }

void write_text_complex(std::ostream& out, const ValueMap& m) {
  if (!m.domain().is_whole()) {
    throw Error(Errc::DomainMismatch, "only whole-complex maps can be written");
  }
  write_simplices(out, m.ambient(), &m);
}

void write_text_complex(const std::filesystem::path& path, const ValueMap& m) {
  auto f = open_out(path);
  write_text_complex(f, m);
  if (!f) throw Error(Errc::IoError, "write failed: " + path.string());
}

void write_text_complex(const std::filesystem::path& path, const Complex& c) {
  auto f = open_out(path);
  write_text_complex(f, c);
  if (!f) throw Error(Errc::IoError, "write failed: " + path.string());
}

// ---- netpbm -------------------------------------------------------------------

namespace {

// Header token reader that skips whitespace and '#' comments.
class PnmHeader {
 public:
  explicit PnmHeader(std::istream& in) : in_(in) {}

  std::size_t next_number() {
    skip();
    std::string digits;
    while (std::isdigit(in_.peek())) digits += static_cast<char>(in_.get());
    if (digits.empty()) throw Error(Errc::ParseError, "netpbm: expected a number in header");
    return parse_int<std::size_t>(digits, 0);
  }

  // After the last header field exactly one whitespace byte precedes raster data.
  void end_header() {
    if (!std::isspace(in_.get())) throw Error(Errc::ParseError, "netpbm: truncated header");
  }

  int next_bit() {
    skip();
    int c = in_.get();
    if (c == '0' || c == '1') return c - '0';
    throw Error(Errc::ParseError, "netpbm: bad P1 sample");
  }

 private:
  void skip() {
    for (;;) {
      int c = in_.peek();
      if (c == '#') {
        while (c != '\n' && c != EOF) c = in_.get();
      } else if (std::isspace(c)) {
        in_.get();
      } else {
        return;
      }
    }
  }

  std::istream& in_;
};

}  // namespace

ImageGrid read_netpbm(std::istream& in) {
  char magic[2] = {0, 0};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] < '1' || magic[1] > '5' ||
      magic[1] == '3') {
    throw Error(Errc::ParseError, "netpbm: expected P1, P2, P4 or P5");
  }
  const char kind = magic[1];
  PnmHeader hdr(in);
  ImageGrid g;
  g.width = hdr.next_number();
  g.height = hdr.next_number();
  if (g.width == 0 || g.height == 0) throw Error(Errc::ParseError, "netpbm: empty image");
  const bool bitmap = kind == '1' || kind == '4';
  if (bitmap) {
    g.maxval = 1;
  } else {
    const auto mv = hdr.next_number();
    if (mv == 0 || mv > 65535) throw Error(Errc::ParseError, "netpbm: bad maxval");
    g.maxval = static_cast<Value>(mv);
  }
  const std::size_t n = g.width * g.height;
  g.pixels.resize(n);
  switch (kind) {
    case '1':
      for (auto& p : g.pixels) p = hdr.next_bit();
      break;
    case '2':
      for (auto& p : g.pixels) {
        const auto v = hdr.next_number();
        if (v > static_cast<std::size_t>(g.maxval)) throw Error(Errc::ParseError, "netpbm: sample above maxval");
        p = static_cast<Value>(v);
      }
      break;
    case '4': {
      hdr.end_header();
      const std::size_t row_bytes = (g.width + 7) / 8;
      std::vector<unsigned char> row(row_bytes);
      for (std::size_t r = 0; r < g.height; ++r) {
        if (!in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row_bytes))) {
          throw Error(Errc::ParseError, "netpbm: truncated raster");
        }
        for (std::size_t c = 0; c < g.width; ++c) {
          g.pixels[r * g.width + c] = (row[c / 8] >> (7 - c % 8)) & 1;
        }
      }
      break;
    }
    case '5': {
      hdr.end_header();
      const bool wide = g.maxval > 255;
      for (auto& p : g.pixels) {
        int hi = in.get();
        int v = hi;
        if (wide) v = (hi << 8) | in.get();
        if (!in) throw Error(Errc::ParseError, "netpbm: truncated raster");
        if (v > g.maxval) throw Error(Errc::ParseError, "netpbm: sample above maxval");
        p = v;
      }
      break;
    }
  }
  return g;
}

ImageGrid read_netpbm(const std::filesystem::path& path) {
  auto f = open_in(path, true);
  return read_netpbm(f);
}

void write_pgm(std::ostream& out, const ImageGrid& g) {
  if (g.maxval < 1 || g.maxval > 65535) throw Error(Errc::ValueOutOfRange, "pgm maxval");
  out << "P5\n" << g.width << ' ' << g.height << '\n' << g.maxval << '\n';
  const bool wide = g.maxval > 255;
  for (Value p : g.pixels) {
    if (p < 0 || p > g.maxval) throw Error(Errc::ValueOutOfRange, "pixel above maxval");
    if (wide) out.put(static_cast<char>((p >> 8) & 0xff));
    out.put(static_cast<char>(p & 0xff));
  }
}

void write_pbm(std::ostream& out, const ImageGrid& g) {
  out << "P4\n" << g.width << ' ' << g.height << '\n';
  const std::size_t row_bytes = (g.width + 7) / 8;
  std::vector<unsigned char> row(row_bytes);
  for (std::size_t r = 0; r < g.height; ++r) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t c = 0; c < g.width; ++c) {
      const Value p = g.at(r, c);
      if (p != 0 && p != 1) throw Error(Errc::ValueOutOfRange, "bitmap pixels must be 0 or 1");
      if (p) row[c / 8] |= static_cast<unsigned char>(0x80u >> (c % 8));
    }
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row_bytes));
  }
}

void write_image(const std::filesystem::path& path, const ImageGrid& g) {
  auto f = open_out(path, true);
  if (path.extension() == ".pbm") write_pbm(f, g);
  else write_pgm(f, g);
  if (!f) throw Error(Errc::IoError, "write failed: " + path.string());
}

// ---- OFF ----------------------------------------------------------------------

MeshSurface read_off(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string_view> toks;
  std::string holder;
  // Returns the next non-empty tokenized line, or false at EOF.
  auto next = [&]() {
    while (std::getline(in, holder)) {
      ++line_no;
      toks = split_ws(strip_comment(holder));
      if (!toks.empty()) return true;
    }
    return false;
  };

  if (!next() || toks[0] != "OFF") throw Error(Errc::ParseError, "OFF: missing header");
  toks.erase(toks.begin());
  if (toks.empty() && !next()) throw Error(Errc::ParseError, "OFF: missing counts");
  if (toks.size() < 2) throw Error(Errc::ParseError, "OFF: bad counts line");
  MeshSurface mesh;
  mesh.vertex_count = parse_int<std::size_t>(toks[0], line_no);
  const auto faces = parse_int<std::size_t>(toks[1], line_no);

  for (std::size_t v = 0; v < mesh.vertex_count; ++v) {
    if (!next()) throw Error(Errc::ParseError, "OFF: truncated vertex list");
    if (toks.size() < 3) throw Error(Errc::ParseError, "OFF: vertex needs 3 coordinates");
    for (int k = 0; k < 3; ++k) parse_double(toks[k], line_no);
  }
  mesh.triangles.reserve(faces);
  for (std::size_t f = 0; f < faces; ++f) {
    if (!next()) throw Error(Errc::ParseError, "OFF: truncated face list");
    const auto k = parse_int<std::size_t>(toks[0], line_no);
    if (k != 3) {
      throw Error(Errc::NonTriangleFace,
                  "line " + std::to_string(line_no) + ": face with " + std::to_string(k) + " vertices");
    }
    if (toks.size() < 4) throw Error(Errc::ParseError, "OFF: short face line");
    std::array<VertexId, 3> t{};
    for (int j = 0; j < 3; ++j) {
      const auto idx = parse_int<std::size_t>(toks[1 + j], line_no);
      if (idx >= mesh.vertex_count) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": index out of range");
      }
      t[j] = static_cast<VertexId>(idx);
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": degenerate triangle");
    }
    mesh.triangles.push_back(t);
  }
  return mesh;
}

MeshSurface read_off(const std::filesystem::path& path) {
  auto f = open_in(path);
  return read_off(f);
}

std::vector<double> read_vertex_values(std::istream& in) {
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;
    if (toks.size() != 1) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": one value per line");
    }
    out.push_back(parse_double(toks[0], line_no));
  }
  return out;
}

std::vector<double> read_vertex_values(const std::filesystem::path& path) {
  auto f = open_in(path);
  return read_vertex_values(f);
}

}  // namespace scmorph::io
