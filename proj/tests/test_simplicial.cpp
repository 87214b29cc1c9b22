#include <gtest/gtest.h>

#include <ptrans/simplicial.hpp>

using namespace ptrans;

namespace {

SimplicialComplex tetrahedron()
{
  return SimplicialComplex({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}},
                           {}, true);
}

std::size_t count_kind(const std::vector<OrientedTriangle>& cells, CellKind k)
{
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [&](const auto& c) { return c.kind == k; }));
}

}  // namespace

TEST(Simplicial, TriangleFacesBecomeEdges)
{
  auto k = tetrahedron();
  EXPECT_EQ(k.edges().size(), 6u);
  EXPECT_TRUE(k.has_edge("d", "a"));
  EXPECT_TRUE(k.has_triangle("c", "a", "b"));
  EXPECT_EQ(k.neighbours("a"), (std::vector<VertexId>{"b", "c", "d"}));
  EXPECT_TRUE(k.supports(EdgePath::through({"a", "b", "d", "a"})));
  EXPECT_TRUE(k.supports(EdgePath::identity("c")));
  EXPECT_FALSE(k.supports(EdgePath::identity("z")));
  EXPECT_TRUE(validate_complex(k, true).empty());
}

TEST(Simplicial, ConstructorRejectsMalformedInput)
{
  EXPECT_THROW(SimplicialComplex({"a", "a"}, {}), std::invalid_argument);
  EXPECT_THROW(SimplicialComplex({"a b"}, {}), std::invalid_argument);
  EXPECT_THROW(SimplicialComplex({"a", "b"}, {{"a", "a", "b"}}), std::invalid_argument);
  EXPECT_THROW(SimplicialComplex({"a"}, {}, {{"a", "a"}}), std::invalid_argument);
}

TEST(Simplicial, ClosureDiagnostics)
{
  SimplicialComplex k({"a", "b"}, {{"a", "b", "c"}});
  auto d = validate_complex(k, false);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].rule, "closure");
  EXPECT_EQ(d[0].simplex, "{a,b,c}");
}

TEST(Simplicial, PurityDiagnostics)
{
  SimplicialComplex k({"a", "b", "c", "x", "y"}, {{"a", "b", "c"}}, {{"x", "y"}});
  auto d = validate_complex(k, true);
  ASSERT_EQ(d.size(), 3u);
  for (const auto& x : d)
    EXPECT_EQ(x.rule, "pure_dim2");
  EXPECT_EQ(d[0].message, "vertex x not in any 2-simplex");
  EXPECT_TRUE(validate_complex(k, false).empty());
}

TEST(Simplicial, OrientedTriangleCounts)
{
  auto k = tetrahedron();
  auto cells = oriented_triangles(k);
  EXPECT_EQ(count_kind(cells, CellKind::alpha), 24u);
  EXPECT_EQ(count_kind(cells, CellKind::alpha_star), 24u);
  EXPECT_EQ(count_kind(cells, CellKind::beta), 12u);
  EXPECT_EQ(count_kind(cells, CellKind::beta_star), 12u);
  EXPECT_EQ(count_kind(cells, CellKind::identity_edge), 12u);
  EXPECT_EQ(count_kind(cells, CellKind::identity_vertex), 4u);
  auto with_reverse = oriented_triangles(k, CellKind::beta, true);
  EXPECT_EQ(with_reverse.size(), 24u);
  for (const auto& c : oriented_triangles(k, CellKind::beta))
    EXPECT_EQ(c.direction, Direction::forward) << c.name();
}

TEST(Simplicial, CellBoundaries)
{
  auto c = alpha_cell("a", "c", "b");
  EXPECT_EQ(c.source_path, EdgePath::through({"a", "b"}));
  EXPECT_EQ(c.target_path, EdgePath::through({"a", "c", "b"}));
  EXPECT_EQ(c.name(), "a.c.b");
  EXPECT_EQ(c.apex(), "c");
  auto s = alpha_cell("a", "c", "b", true);
  EXPECT_EQ(s.source_path, c.target_path);
  EXPECT_EQ(s.name(), "a.c.b*");
  auto b = beta_cell("c", "a", "b");
  EXPECT_EQ(b.source_path, EdgePath::identity("c"));
  EXPECT_EQ(b.target_path, EdgePath::through({"c", "a", "b", "c"}));
  EXPECT_EQ(b.direction, Direction::forward);
  EXPECT_EQ(beta_cell("c", "b", "a").direction, Direction::reverse);
}

TEST(Simplicial, CellNames)
{
  EXPECT_EQ(split_cell_name("acb"), (std::vector<VertexId>{"a", "c", "b"}));
  EXPECT_EQ(split_cell_name("v1.v3.v2"), (std::vector<VertexId>{"v1", "v3", "v2"}));
  EXPECT_THROW(split_cell_name("a..b"), std::invalid_argument);
  EXPECT_EQ(join_cell_name({"c", "a", "b", "c"}), "c.a.b.c");
}

TEST(Simplicial, ClassifyEveryEnumeratedCell)
{
  auto k = tetrahedron();
  for (const auto& c : oriented_triangles(k)) {
    auto got = classify_cell(c.source_path, c.target_path, k);
    ASSERT_TRUE(got.has_value()) << c.name();
    EXPECT_EQ(*got, c) << c.name();
  }
}

TEST(Simplicial, ClassifyModuloX1)
{
  auto k = tetrahedron();
  // (ab) vs (ac,cd,dc,cb) reduces to the alpha cell a.c.b
  auto got = classify_cell(EdgePath::through({"a", "b"}), EdgePath::through({"a", "c", "d", "c", "b"}), k);
  ASSERT_TRUE(got);
  EXPECT_EQ(got->name(), "a.c.b");
  EXPECT_FALSE(classify_cell(EdgePath::through({"a", "b"}), EdgePath::through({"a", "c", "d", "b"}), k));
  EXPECT_FALSE(classify_cell(EdgePath::through({"a", "b"}), EdgePath::through({"a", "c"}), k));
}
