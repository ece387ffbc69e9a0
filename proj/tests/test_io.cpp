#include <sstream>

#include "common.hpp"

namespace scmorph {
namespace {

using test::error_of;
using test::triangle;

io::TextComplex parse(const std::string& text) {
  std::istringstream in(text);
  return io::read_text_complex(in);
}

std::string write(const Complex& c) {
  std::ostringstream out;
  io::write_text_complex(out, c);
  return out.str();
}

std::string write(const ValueMap& m) {
  std::ostringstream out;
  io::write_text_complex(out, m);
  return out.str();
}

TEST(TextFormat, WritesCanonicalOrder) {
  EXPECT_EQ(write(*triangle()), "ascx n=2 count=7\n1\n2\n3\n1 2\n1 3\n2 3\n1 2 3\n");
}

TEST(TextFormat, ReadsPlainGeneratorsWithClosure) {
  auto t = parse("# the triangle\n1 2 3\n");
  EXPECT_FALSE(t.has_values());
  EXPECT_EQ(t.complex->total_size(), 7u);
  EXPECT_EQ(write(*t.complex), write(*triangle()));
}

TEST(TextFormat, WeightedRoundTripIsByteExact) {
  const std::string text =
      "ascx n=1 count=5\n1 = 5\n2 = 2\n3 = 7\n1 2 = 2\n2 3 = 2\n";
  auto t = parse(text);
  ASSERT_TRUE(t.has_values());
  auto m = t.value_map(ValueRange{0, 7});
  EXPECT_EQ(m.at(Simplex{3}), 7);
  EXPECT_EQ(write(m), text);
  EXPECT_EQ(t.value_bounds(), (std::pair<Value, Value>{2, 7}));
}

TEST(TextFormat, CommentsAndBlankLines) {
  auto t = parse("\n  # nothing\n1 2 # an edge\n\n2 3\n");
  EXPECT_EQ(t.complex->size(1), 2u);
}

TEST(TextFormat, Errors) {
  EXPECT_EQ(error_of([] { parse("2 1\n"); }), Errc::ParseError);
  EXPECT_EQ(error_of([] { parse("1 2\n1 2\n"); }), Errc::ParseError);
  EXPECT_EQ(error_of([] { parse("1 = 3\n2\n"); }), Errc::ParseError);
  EXPECT_EQ(error_of([] { parse("1 x\n"); }), Errc::ParseError);
  EXPECT_EQ(error_of([] { parse("ascx n=1 count=3\n1 2 3\n"); }), Errc::ParseError);
  EXPECT_EQ(error_of([] { parse("ascx n=2 count=9\n1 2 3\n"); }), Errc::ParseError);
  EXPECT_EQ(error_of([] { parse("# empty\n"); }), Errc::EmptyInput);
  EXPECT_EQ(error_of([] { parse("1 2 = 1\n1 = 1\n"); }), Errc::NotClosed);
  EXPECT_EQ(error_of([] { parse("1 = 9\n").value_map(ValueRange{0, 7}); }), Errc::ValueOutOfRange);
}

TEST(Netpbm, PgmRoundTrip) {
  ImageGrid g{3, 2, 255, {0, 1, 2, 253, 254, 255}};
  std::ostringstream out;
  io::write_pgm(out, g);
  EXPECT_EQ(out.str().substr(0, 11), "P5\n3 2\n255\n");
  std::istringstream in(out.str());
  EXPECT_EQ(io::read_netpbm(in), g);
}

TEST(Netpbm, SixteenBitPgm) {
  ImageGrid g{2, 1, 1000, {999, 3}};
  std::ostringstream out;
  io::write_pgm(out, g);
  std::istringstream in(out.str());
  EXPECT_EQ(io::read_netpbm(in), g);
}

TEST(Netpbm, PbmRoundTripAcrossByteBoundary) {
  ImageGrid g{10, 2, 1, {}};
  for (int i = 0; i < 20; ++i) g.pixels.push_back(i % 3 == 0);
  std::ostringstream out;
  io::write_pbm(out, g);
  std::istringstream in(out.str());
  EXPECT_EQ(io::read_netpbm(in), g);
  ImageGrid bad{1, 1, 1, {2}};
  std::ostringstream sink;
  EXPECT_EQ(error_of([&] { io::write_pbm(sink, bad); }), Errc::ValueOutOfRange);
}

TEST(Netpbm, AsciiVariants) {
  std::istringstream p2("P2\n# comment\n2 2\n7\n0 7\n3 4\n");
  auto g = io::read_netpbm(p2);
  EXPECT_EQ(g.maxval, 7);
  EXPECT_EQ(g.pixels, (std::vector<Value>{0, 7, 3, 4}));
  std::istringstream p1("P1\n3 1\n1 0 1\n");
  auto b = io::read_netpbm(p1);
  EXPECT_EQ(b.maxval, 1);
  EXPECT_EQ(b.pixels, (std::vector<Value>{1, 0, 1}));
}

TEST(Netpbm, Errors) {
  std::istringstream png("\x89PNG....");
  EXPECT_EQ(error_of([&] { io::read_netpbm(png); }), Errc::ParseError);
  std::istringstream truncated("P5\n4 4\n255\nab");
  EXPECT_EQ(error_of([&] { io::read_netpbm(truncated); }), Errc::ParseError);
}

TEST(Off, TwoTriangles) {
  std::istringstream in("OFF\n4 2 0\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n3 0 1 2\n3 1 2 3\n");
  auto mesh = io::read_off(in);
  EXPECT_EQ(mesh.vertex_count, 4u);
  ASSERT_EQ(mesh.triangles.size(), 2u);
  auto c = mesh_to_complex(mesh);
  EXPECT_EQ(c->size(1), 5u);
  EXPECT_EQ(c->size(2), 2u);
}

TEST(Off, Errors) {
  std::istringstream quad("OFF\n4 1 0\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n4 0 1 2 3\n");
  EXPECT_EQ(error_of([&] { io::read_off(quad); }), Errc::NonTriangleFace);
  std::istringstream nohdr("4 1 0\n");
  EXPECT_EQ(error_of([&] { io::read_off(nohdr); }), Errc::ParseError);
  std::istringstream shortv("OFF\n3 1 0\n0 0 0\n");
  EXPECT_EQ(error_of([&] { io::read_off(shortv); }), Errc::ParseError);
}

TEST(VertexValues, ReadsOnePerLine) {
  std::istringstream in("0.25\n# skip\n\n1\n-2.5e-1\n");
  EXPECT_EQ(io::read_vertex_values(in), (std::vector<double>{0.25, 1.0, -0.25}));
  std::istringstream bad("0.5 0.5\n");
  EXPECT_EQ(error_of([&] { io::read_vertex_values(bad); }), Errc::ParseError);
}

}  // namespace
}  // namespace scmorph
