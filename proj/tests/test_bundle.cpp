#include <random>

#include <gtest/gtest.h>

#include <ptrans/bundle.hpp>
#include <ptrans/random.hpp>

#include "oracle.hpp"

using namespace ptrans;

namespace {

std::shared_ptr<const SimplicialComplex> tetrahedron()
{
  return std::make_shared<const SimplicialComplex>(
      std::vector<VertexId>{"a", "b", "c", "d"},
      std::vector<Triangle>{{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}},
      std::vector<Edge>{}, true);
}

Connection1 z12_connection()
{
  Group g = Group::cyclic(12);
  auto r = [&](int v) { return Element{Residue{v}}; };
  return Connection1(g, tetrahedron(),
                     {{{"a", "b"}, r(3)}, {{"b", "d"}, r(4)}, {{"d", "a"}, r(7)},
                      {{"a", "c"}, r(1)}, {{"b", "c"}, r(5)}, {{"c", "d"}, r(2)}});
}

}  // namespace

TEST(Connection, ValueOrientationAndErrors)
{
  auto f = z12_connection();
  const Group& g = f.group();
  EXPECT_EQ(f.value("a", "b"), g.parse("3"));
  EXPECT_EQ(f.value("b", "a"), g.parse("9"));
  EXPECT_EQ(f.value("c", "c"), g.identity());
  EXPECT_THROW(f.value("a", "z"), std::out_of_range);

  auto k = tetrahedron();
  EXPECT_THROW(Connection1(g, k, {{{"a", "b"}, g.identity()}}), std::invalid_argument);
  auto values = f.stored();
  values.emplace(OrderedEdge{"b", "a"}, g.identity());
  EXPECT_THROW(Connection1(g, k, values), std::invalid_argument);
}

TEST(Connection, HolonomyMatchesHandSum)
{
  auto f = z12_connection();
  // 3 + 4 + 7 = 14 = 2 mod 12
  EXPECT_EQ(holonomy(f, EdgePath::through({"a", "b", "d", "a"})), f.group().parse("2"));
  // a->c->b: 1 - 5 = -4 = 8
  EXPECT_EQ(holonomy(f, EdgePath::through({"a", "c", "b"})), f.group().parse("8"));
  EXPECT_EQ(holonomy(f, EdgePath::identity("a")), f.group().identity());
}

TEST(Connection, HolonomyOnFreeGroupIsTheOrderedWord)
{
  Group g = Group::free({"p", "q", "r", "s", "t", "u"});
  auto f = Connection1(g, tetrahedron(),
                       {{{"a", "b"}, g.parse("p")}, {{"b", "c"}, g.parse("q")}, {{"a", "c"}, g.parse("r")},
                        {{"a", "d"}, g.parse("s")}, {{"b", "d"}, g.parse("t")}, {{"c", "d"}, g.parse("u")}});
  EXPECT_EQ(g.format(holonomy(f, EdgePath::through({"a", "b", "c", "a"}))), "p*q*r^-1");
  EXPECT_EQ(g.format(holonomy(f, EdgePath::through({"a", "b", "a"}))), "e");
}

TEST(Gauge, TransformAndIsomorphism)
{
  auto f = z12_connection();
  const Group& g = f.group();
  GaugeTransform n{{"a", g.parse("1")}, {"b", g.parse("2")}, {"c", g.parse("0")}, {"d", g.parse("5")}};
  auto h = gauge_transform(f, n);
  // g_ab = -n_a + f_ab + n_b = -1 + 3 + 2
  EXPECT_EQ(h.value("a", "b"), g.parse("4"));
  auto m = find_isomorphism(f, h);
  ASSERT_TRUE(m);
  EXPECT_EQ(gauge_transform(f, *m).stored(), h.stored());

  // a connection with different loop holonomy is not isomorphic
  auto values = f.stored();
  values.at({"a", "b"}) = g.parse("4");
  EXPECT_FALSE(find_isomorphism(f, Connection1(g, f.complex_ptr(), values)));
  EXPECT_THROW(gauge_transform(f, {{"a", g.identity()}}), std::invalid_argument);
}

TEST(Gauge, IsomorphismOnNonAbelianGroup)
{
  Group s3 = Group::symmetric(3);
  std::mt19937_64 rng(2);
  auto k = tetrahedron();
  for (int n = 0; n < 50; ++n) {
    auto f = random_connection(s3, k, rng);
    auto gauge = random_gauge(s3, *k, rng);
    auto h = gauge_transform(f, gauge);
    auto found = find_isomorphism(f, h);
    ASSERT_TRUE(found);
    ASSERT_EQ(gauge_transform(f, *found).stored(), h.stored());
  }
}

TEST(Wilson, PermutationTraceCountsFixedPoints)
{
  Group s3 = Group::symmetric(3);
  auto f = Connection1::trivial(s3, tetrahedron());
  auto rho = Representation::permutation(s3);
  EXPECT_EQ(wilson_loop(f, EdgePath::through({"a", "b", "c", "a"}), rho), 3.0);
  EXPECT_THROW(wilson_loop(f, EdgePath::through({"a", "b"}), rho), std::invalid_argument);

  auto values = f.stored();
  values.at({"a", "b"}) = s3.parse("(1 2 3)");
  auto h = Connection1(s3, f.complex_ptr(), values);
  EXPECT_EQ(wilson_loop(h, EdgePath::through({"a", "b", "c", "a"}), rho), 0.0);
  EXPECT_EQ(associated_transport(h, EdgePath::through({"a", "b"}), rho),
            represent(rho, s3.parse("(1 2 3)")));
}

TEST(ConnectionProperty, HolonomyMatchesModularOracle)
{
  Group g = Group::cyclic(7);
  auto k = tetrahedron();
  std::mt19937_64 rng(23);
  for (int n = 0; n < 1000; ++n) {
    auto f = random_connection(g, k, rng);
    EdgePath p = random_path(*k, rng, 10);
    std::int64_t sum = 0;
    for (const auto& s : p.steps()) {
      if (s.degenerate())
        continue;
      auto it = f.stored().find({s.from, s.to});
      if (it != f.stored().end())
        sum += std::get<Residue>(it->second.value).value;
      else
        sum -= std::get<Residue>(f.stored().at({s.to, s.from}).value).value;
    }
    ASSERT_EQ(std::get<Residue>(holonomy(f, p).value).value, ((sum % 7) + 7) % 7);
  }
}

TEST(ConnectionProperty, FunctorialityAndGaugeCovariance)
{
  auto k = tetrahedron();
  std::mt19937_64 rng(29);
  for (const auto& g : {Group::symmetric(4), Group::free({"x", "y"}), Group::dihedral(6)}) {
    for (int n = 0; n < 400; ++n) {
      auto f = random_connection(g, k, rng);
      EdgePath p = random_path(*k, rng, 6);
      EdgePath q = random_path(*k, rng, 6, p.target());
      ASSERT_EQ(holonomy(f, compose(p, q)), g.multiply(holonomy(f, p), holonomy(f, q)));
      ASSERT_EQ(holonomy(f, invert(p)), g.inverse(holonomy(f, p)));
      ASSERT_EQ(holonomy(f, p), holonomy(f, reduce_x1(p)));
      auto n_ = random_gauge(g, *k, rng);
      auto h = gauge_transform(f, n_);
      ASSERT_EQ(holonomy(h, p), g.product_of({g.inverse(n_.at(p.source())), holonomy(f, p), n_.at(p.target())}));
      auto m = random_gauge(g, *k, rng);
      ASSERT_EQ(gauge_transform(h, m).stored(), gauge_transform(f, compose_gauges(g, n_, m)).stored());
    }
  }
}
