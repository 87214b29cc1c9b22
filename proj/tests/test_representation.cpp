#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <ptrans/representation.hpp>

using namespace ptrans;

TEST(Representation, PermutationMatricesAreHomomorphic)
{
  Group s4 = Group::symmetric(4);
  auto rho = Representation::permutation(s4);
  EXPECT_TRUE(rho.exact());
  const auto all = s4.elements();
  for (const auto& a : all)
    for (const auto& b : all)
      ASSERT_EQ(represent(rho, s4.multiply(a, b)), represent(rho, a) * represent(rho, b));
}

TEST(Representation, PermutationCharacterCountsFixedPoints)
{
  Group s4 = Group::symmetric(4);
  auto rho = Representation::permutation(s4);
  for (const auto& a : s4.elements()) {
    const auto& img = std::get<Permutation>(a.value).images;
    int fixed = 0;
    for (std::size_t i = 0; i < img.size(); ++i)
      fixed += img[i] == static_cast<int>(i + 1);
    ASSERT_EQ(character(rho, a), fixed);
  }
}

TEST(Representation, CyclicCharacter)
{
  Group z6 = Group::cyclic(6);
  auto rho = Representation::cyclic_character(z6, 1);
  EXPECT_FALSE(rho.exact());
  EXPECT_NEAR(character(rho, z6.parse("0")), 2.0, 1e-12);
  EXPECT_NEAR(character(rho, z6.parse("3")), -2.0, 1e-12);
  EXPECT_NEAR(character(rho, z6.parse("1")), 2.0 * std::cos(std::numbers::pi / 3), 1e-12);
  for (const auto& a : z6.elements())
    for (const auto& b : z6.elements())
      ASSERT_TRUE(represent(rho, z6.multiply(a, b)).isApprox(represent(rho, a) * represent(rho, b)));
  EXPECT_THROW(Representation::cyclic_character(Group::symmetric(3), 1), std::invalid_argument);
}

TEST(Representation, TableValidation)
{
  Group z2 = Group::cyclic(2);
  Matrix one = Matrix::Identity(1, 1), minus = -Matrix::Identity(1, 1);
  auto sign = Representation::table(z2, {{z2.parse("0"), one}, {z2.parse("1"), minus}}, true);
  EXPECT_EQ(character(sign, z2.parse("1")), -1.0);
  EXPECT_THROW(Representation::table(z2, {{z2.parse("0"), one}}, true), std::invalid_argument);
  EXPECT_THROW(Representation::table(z2, {{z2.parse("0"), one}, {z2.parse("1"), one * 2.0}}, true),
               std::invalid_argument);
}
