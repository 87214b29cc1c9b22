#include <random>

#include <gtest/gtest.h>

#include <ptrans/edge_path.hpp>

#include "oracle.hpp"

using namespace ptrans;

namespace {

oracle::Path to_oracle(const EdgePath& p)
{
  oracle::Path out;
  for (const auto& s : p.steps())
    out.push_back({s.from, s.to});
  return out;
}

// Random walk on the complete graph over {a..e}, with degenerate steps and
// deliberate backtracking so cancellations actually occur.
EdgePath random_walk(std::mt19937_64& rng, std::size_t max_len)
{
  const std::vector<std::string> names{"a", "b", "c", "d", "e"};
  std::uniform_int_distribution<std::size_t> len(1, max_len), pick(0, names.size() - 1);
  std::uniform_int_distribution<int> kind(0, 9);
  std::vector<Step> steps;
  VertexId at = names[pick(rng)];
  for (std::size_t i = 0, n = len(rng); i < n; ++i) {
    int k = kind(rng);
    if (k == 0) {
      steps.push_back({at, at});
    } else if (k <= 4 && !steps.empty() && !steps.back().degenerate()) {
      steps.push_back(steps.back().reversed());
      at = steps.back().to;
    } else {
      VertexId next = names[pick(rng)];
      steps.push_back({at, next});
      at = next;
    }
  }
  return EdgePath(std::move(steps));
}

}  // namespace

TEST(EdgePath, ConstructionChecksComposability)
{
  EXPECT_THROW(EdgePath({}), std::invalid_argument);
  EXPECT_THROW(EdgePath({{"a", "b"}, {"c", "d"}}), std::invalid_argument);
  EdgePath p = EdgePath::through({"a", "c", "b"});
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.source(), "a");
  EXPECT_EQ(p.target(), "b");
  EXPECT_EQ(p.vertex_at(1), "c");
  EXPECT_EQ(p.vertices(), (std::vector<VertexId>{"a", "c", "b"}));
  EXPECT_FALSE(p.is_loop());
}

TEST(EdgePath, IdentityIsOneDegenerateStep)
{
  EdgePath e = EdgePath::identity("a");
  EXPECT_TRUE(e.is_identity());
  EXPECT_TRUE(e.is_loop());
  EXPECT_EQ(EdgePath::through({"a"}), e);
  EXPECT_EQ(to_string(e), "(aa)");
}

TEST(EdgePath, ComposeAndInvert)
{
  EdgePath p = EdgePath::through({"a", "b"});
  EdgePath q = EdgePath::through({"b", "c", "d"});
  EXPECT_EQ(compose(p, q), EdgePath::through({"a", "b", "c", "d"}));
  EXPECT_THROW(compose(q, p), std::invalid_argument);
  EXPECT_EQ(compose(EdgePath::identity("a"), p), p);
  EXPECT_EQ(compose(p, EdgePath::identity("b")), p);
  EXPECT_EQ(invert(q), EdgePath::through({"d", "c", "b"}));
}

TEST(EdgePath, ReduceX1)
{
  EXPECT_EQ(reduce_x1(EdgePath::through({"a", "b", "a"})), EdgePath::identity("a"));
  EXPECT_EQ(reduce_x1(EdgePath::through({"a", "b", "c", "b", "d"})), EdgePath::through({"a", "b", "d"}));
  EdgePath with_deg({{"a", "b"}, {"b", "b"}, {"b", "a"}, {"a", "c"}});
  EXPECT_EQ(reduce_x1(with_deg), EdgePath::through({"a", "c"}));
  EXPECT_TRUE(x1_homotopic(with_deg, EdgePath::through({"a", "d", "a", "c"})));
  EXPECT_FALSE(x1_homotopic(EdgePath::through({"a", "b", "c"}), EdgePath::through({"a", "c"})));
}

TEST(EdgePath, DegenerateInsertDrop)
{
  EdgePath p = EdgePath::through({"a", "b", "c"});
  EdgePath q = insert_degenerate(p, 1);
  EXPECT_EQ(q, EdgePath({{"a", "b"}, {"b", "b"}, {"b", "c"}}));
  EXPECT_EQ(drop_degenerate(q, 1), p);
  EXPECT_THROW(drop_degenerate(p, 0), std::invalid_argument);
  EXPECT_THROW(drop_degenerate(EdgePath::identity("a"), 0), std::invalid_argument);
  EXPECT_THROW(insert_degenerate(p, 3), std::out_of_range);
  EXPECT_EQ(strip_degenerate(q), p);
}

TEST(EdgePath, ToStringLongNames)
{
  EXPECT_EQ(to_string(EdgePath::through({"a", "c", "b"})), "(ac,cb)");
  EXPECT_EQ(to_string(EdgePath::through({"v1", "v2"})), "(v1>v2)");
}

TEST(EdgePathProperty, ReductionMatchesLeftAndRightOracles)
{
  std::mt19937_64 rng(7);
  for (int n = 0; n < 2000; ++n) {
    EdgePath p = random_walk(rng, 14);
    auto left = oracle::reduce_path(to_oracle(p), true);
    auto right = oracle::reduce_path(to_oracle(p), false);
    ASSERT_EQ(left, right) << to_string(p);
    ASSERT_EQ(to_oracle(reduce_x1(p)), left) << to_string(p);
  }
}

TEST(EdgePathProperty, ReductionIsIdempotentAndRespectsComposition)
{
  std::mt19937_64 rng(11);
  for (int n = 0; n < 1000; ++n) {
    EdgePath p = random_walk(rng, 10);
    ASSERT_EQ(reduce_x1(reduce_x1(p)), reduce_x1(p));
    ASSERT_TRUE(x1_homotopic(compose(p, invert(p)), EdgePath::identity(p.source())));
    EdgePath r = reduce_x1(p);
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      ASSERT_NE(r[i + 1], r[i].reversed());
  }
}
