#include "common.hpp"

namespace scmorph {
namespace {

using test::error_of;
using test::triangle;

ImageGrid image(std::size_t w, std::size_t h, std::vector<Value> px, Value maxval = 255) {
  return ImageGrid{w, h, maxval, std::move(px)};
}

TEST(ImageStructure, Counts) {
  auto c33 = complex_from_image_structure(3, 3);
  EXPECT_EQ(c33->size(0), 9u);
  EXPECT_EQ(c33->size(1), 16u);
  EXPECT_EQ(c33->size(2), 8u);
  auto c11 = complex_from_image_structure(1, 1);
  EXPECT_EQ(c11->dim(), 0);
  EXPECT_EQ(c11->size(0), 1u);
  auto c12 = complex_from_image_structure(2, 1);
  EXPECT_EQ(c12->dim(), 1);
  EXPECT_EQ(c12->size(0), 2u);
  EXPECT_EQ(c12->size(1), 1u);
  EXPECT_EQ(error_of([] { complex_from_image_structure(0, 4); }), Errc::EmptyInput);
}

TEST(ImageStructure, DiagonalAndInteriorDegree) {
  auto c = complex_from_image_structure(3, 3);
  EXPECT_TRUE(c->contains(Simplex{0, 4}));   // (0,0)-(1,1)
  EXPECT_FALSE(c->contains(Simplex{1, 3}));  // anti-diagonal is absent
  EXPECT_TRUE(c->contains(Simplex{0, 1, 4}));
  EXPECT_TRUE(c->contains(Simplex{0, 3, 4}));
  auto centre = star(SimplexSet::of(c, {Simplex{4}}));
  EXPECT_EQ(centre.size(1), 6u);
  EXPECT_EQ(centre.size(2), 6u);
}

TEST(BinaryIngestion, Examples) {
  auto all = image(2, 2, {9, 9, 9, 9});
  EXPECT_EQ(binary_complex_from_image(all, 5).members(),
            SimplexSet::full(complex_from_image_structure(all)).members());
  auto none = image(2, 2, {1, 1, 1, 1});
  EXPECT_TRUE(binary_complex_from_image(none, 5).empty());
  // pixels 0, 1 and 3 lie on the triangle {0,1,3}
  auto triple = image(2, 2, {9, 9, 0, 9});
  auto x = binary_complex_from_image(triple, 5);
  EXPECT_EQ(x.size(0), 3u);
  EXPECT_EQ(x.size(1), 3u);
  EXPECT_EQ(x.size(2), 1u);
  EXPECT_TRUE(is_subcomplex(x));
}

TEST(BinaryIngestion, CommutesWithGrayPath) {
  auto g = image(3, 2, {0, 3, 7, 2, 5, 1}, 7);
  auto m = stack_from_image(g);
  for (Value t = 0; t <= 7; ++t) {
    EXPECT_EQ(binary_complex_from_image(g, t).members(), threshold(m, t).members()) << t;
  }
}

TEST(VertexPropagation, Examples) {
  auto t = triangle();
  std::vector<Value> v = {5, 2, 7};
  auto m = stack_from_vertex_values(t, v, ValueRange{0, 7});
  EXPECT_EQ(m.at(Simplex{1, 2}), 2);
  EXPECT_EQ(m.at(Simplex{1, 3}), 5);
  EXPECT_EQ(m.at(Simplex{1, 2, 3}), 2);
  EXPECT_TRUE(is_simplicial_stack(m));
  std::vector<Value> flat = {4, 4, 4};
  EXPECT_EQ(stack_from_vertex_values(t, flat, ValueRange{0, 7}),
            ValueMap(t, ValueRange{0, 7}, Domain::whole(), 4));
}

TEST(VertexPropagation, ImageRoundTrip) {
  auto g = image(3, 2, {10, 200, 30, 40, 0, 255});
  auto m = stack_from_image(g);
  auto back = vertex_values_to_image(m, 3, 2);
  EXPECT_EQ(back, g);
  auto id = gray_filter({FilterKind::Asf, 0, Variant::Up}, m);
  EXPECT_EQ(vertex_values_to_image(id, 3, 2), g);
  EXPECT_EQ(error_of([&] { vertex_values_to_image(m, 2, 2); }), Errc::ShapeMismatch);
}

TEST(VertexPropagation, ConstantMapGivesConstantImage) {
  auto c = complex_from_image_structure(4, 3);
  ValueMap m(c, ValueRange{0, 255}, Domain::whole(), 77);
  auto g = vertex_values_to_image(m, 4, 3);
  EXPECT_EQ(g.pixels, std::vector<Value>(12, 77));
  EXPECT_EQ(g.maxval, 255);
}

TEST(Mesh, ToComplex) {
  MeshSurface one{3, {{0, 1, 2}}, {}};
  auto c1 = mesh_to_complex(one);
  EXPECT_EQ(c1->size(0), 3u);
  EXPECT_EQ(c1->size(1), 3u);
  EXPECT_EQ(c1->size(2), 1u);
  MeshSurface two{4, {{0, 1, 2}, {1, 2, 3}}, {}};
  auto c2 = mesh_to_complex(two);
  EXPECT_EQ(c2->size(0), 4u);
  EXPECT_EQ(c2->size(1), 5u);
  EXPECT_EQ(c2->size(2), 2u);
  MeshSurface points{3, {}, {}};
  EXPECT_EQ(mesh_to_complex(points)->dim(), 0);
  EXPECT_EQ(error_of([] { mesh_to_complex(MeshSurface{2, {{0, 1, 2}}, {}}); }), Errc::ParseError);
  EXPECT_EQ(error_of([] { mesh_to_complex(MeshSurface{3, {{0, 1, 1}}, {}}); }), Errc::ParseError);
}

TEST(Quantize, Examples) {
  std::vector<double> raw = {0.0, 1.0, 0.51, 0.5, -3.0, 4.0};
  auto q = quantize_values(raw, 0.0, 1.0, ValueRange{0, 255});
  EXPECT_EQ(q, (std::vector<Value>{0, 255, 130, 128, 0, 255}));
  std::vector<double> one = {0.0};
  EXPECT_EQ(error_of([&] { quantize_values(one, 1.0, 1.0, ValueRange{0, 255}); }),
            Errc::DegenerateInterval);
}

}  // namespace
}  // namespace scmorph
