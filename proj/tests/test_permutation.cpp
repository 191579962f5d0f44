#include <gtest/gtest.h>

#include <map>
#include <sstream>

#include "reemobius/permutation.hpp"

using reemobius::oracle::FiniteGroup;
using reemobius::oracle::Permutation;

TEST(Permutation, ParseAndPrint) {
  const auto p = Permutation::parse("(1 2 3)(4 5)");
  EXPECT_EQ(p.degree(), 5u);
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p(2), 0);
  EXPECT_EQ(p(3), 4);
  EXPECT_EQ(p.str(), "(1 2 3)(4 5)");
  EXPECT_EQ(Permutation::parse("()", 3).str(), "()");
  EXPECT_EQ(Permutation::parse("(1,2)").str(), "(1 2)");
  EXPECT_THROW(Permutation::parse("(1 2"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(0 1)"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(1 1)"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(1 7)", 5), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 0}), std::invalid_argument);
}

TEST(Permutation, CompositionAppliesRightFirst) {
  const auto a = Permutation::from_cycles({{0, 1}}, 3);
  const auto b = Permutation::from_cycles({{1, 2}}, 3);
  const auto ab = a * b;  // x -> a(b(x))
  EXPECT_EQ(ab(0), 1);
  EXPECT_EQ(ab(1), 2);
  EXPECT_EQ(ab(2), 0);
  EXPECT_TRUE((ab * ab.inverse()).is_identity());
  EXPECT_THROW(a * Permutation::identity(4), std::invalid_argument);
}

TEST(FiniteGroup, ClosureOrders) {
  EXPECT_EQ(FiniteGroup::closure({Permutation::from_cycles({{0, 1}}, 4),
                                  Permutation::from_cycles({{0, 1, 2, 3}}, 4)})
                .order(),
            24u);
  EXPECT_EQ(FiniteGroup::closure({Permutation::from_cycles({{0, 1, 2}}, 5),
                                  Permutation::from_cycles({{0, 1, 2, 3, 4}}, 5)})
                .order(),
            60u);
  EXPECT_EQ(FiniteGroup::closure({Permutation::identity(3)}).order(), 1u);
  EXPECT_THROW(FiniteGroup::closure({Permutation::identity(3), Permutation::identity(4)}),
               std::invalid_argument);
  EXPECT_THROW(FiniteGroup::closure({}), std::invalid_argument);
  EXPECT_THROW(FiniteGroup::closure({Permutation::from_cycles({{0, 1}}, 5),
                                     Permutation::from_cycles({{0, 1, 2, 3, 4}}, 5)},
                                    100),
               std::length_error);
}

TEST(FiniteGroup, TablesAreConsistent) {
  const auto G = FiniteGroup::closure({Permutation::from_cycles({{0, 1}}, 4),
                                       Permutation::from_cycles({{0, 1, 2, 3}}, 4)});
  EXPECT_TRUE(G.element(0).is_identity());
  std::map<unsigned, int> orders;
  for (std::uint32_t a = 0; a < G.order(); ++a) {
    EXPECT_EQ(G.mul(a, G.inv(a)), 0u);
    ++orders[G.element_order(a)];
    for (std::uint32_t b = 0; b < G.order(); b += 5) {
      EXPECT_EQ(G.element(G.mul(a, b)), G.element(a) * G.element(b));
    }
  }
  EXPECT_EQ(orders, (std::map<unsigned, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}));
}

TEST(GroupFile, ParsesCommentsAndPadsDegree) {
  std::istringstream in("# header\n\n(1 2)\n  (1 2 3 4 5)\n");
  const auto gens = reemobius::oracle::parse_group_text(in);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].degree(), 5u);
  EXPECT_EQ(FiniteGroup::closure(gens).order(), 120u);
  std::istringstream empty("# nothing\n");
  EXPECT_THROW(reemobius::oracle::parse_group_text(empty), std::invalid_argument);
  std::istringstream bad("(1 2)\n(3 x)\n");
  EXPECT_THROW(reemobius::oracle::parse_group_text(bad), std::invalid_argument);
  EXPECT_THROW(reemobius::oracle::parse_group_file("/nonexistent/file"), std::invalid_argument);
}
