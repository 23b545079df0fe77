#include <gtest/gtest.h>

#include "support.hpp"

using namespace testsupport;

TEST(Group, DihedralStructure) {
  for (int n = 2; n <= 12; ++n) {
    GroupPtr g = build_dihedral(n);
    EXPECT_EQ(g->order(), 2 * n);
    EXPECT_EQ(g->name(), "D" + std::to_string(2 * n));
    int x = g->generator(0), y = g->generator(1);
    EXPECT_EQ(g->element_order(x), n);
    EXPECT_EQ(g->element_order(y), 2);
    EXPECT_EQ(g->mul(g->mul(y, x), y), g->inv(x));
    for (const auto& r : g->relators()) EXPECT_EQ(g->evaluate(r), 0);
    // n reflections, plus the central x^(n/2) when n is even
    EXPECT_EQ(involution_list(*g).size(), static_cast<std::size_t>(n % 2 == 0 ? n + 1 : n));
  }
}

TEST(Group, QuaternionHasOneInvolution) {
  for (int n = 2; n <= 6; ++n) {
    GroupPtr g = build_quaternion(n);
    EXPECT_EQ(g->order(), 4 * n);
    EXPECT_EQ(involution_list(*g).size(), 1u);
    int y = g->generator(1);
    EXPECT_EQ(g->element_order(y), 4);
  }
}

TEST(Group, CyclicAndProducts) {
  GroupPtr c = build_cyclic(5);
  EXPECT_EQ(c->element_order(c->generator(0)), 5);
  GroupPtr p = direct_product(build_dihedral(4), build_cyclic(2));
  EXPECT_EQ(p->order(), 16);
  EXPECT_EQ(p->name(), "D8xC2");
  EXPECT_EQ(p->generator_names(), (std::vector<std::string>{"x", "y", "z"}));
  for (const auto& r : p->relators()) EXPECT_EQ(p->evaluate(r), 0);
  // z is central
  int z = p->generator(2);
  for (int a = 0; a < p->order(); ++a) EXPECT_EQ(p->mul(a, z), p->mul(z, a));
}

TEST(Group, ParseSpecs) {
  EXPECT_EQ(parse_group_spec("D8")->order(), 8);
  EXPECT_EQ(parse_group_spec("Q8")->order(), 8);
  EXPECT_EQ(parse_group_spec("Z3")->order(), 3);
  EXPECT_EQ(parse_group_spec("D8xC2")->order(), 16);
  EXPECT_THROW(parse_group_spec("D7"), ParseError);
  EXPECT_THROW(parse_group_spec("Q6"), ParseError);
  EXPECT_THROW(parse_group_spec("K4"), ParseError);
  try {
    parse_group_spec("D8xC");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(Group, WordsAndNames) {
  GroupPtr g = build_dihedral(4);
  for (int a = 0; a < g->order(); ++a) {
    EXPECT_EQ(g->evaluate(g->word_for(a)), a);
    EXPECT_EQ(g->evaluate(g->shortest_word(a)), a);
  }
  EXPECT_EQ(g->element_name(0), "1");
  EXPECT_EQ(g->generator_index("y"), 1);
  EXPECT_THROW(g->generator_index("q"), UnknownGenerator);
}

TEST(Group, RejectsInvalidTables) {
  // {0, 1} with 1 * 1 = 1 is not a group.
  EXPECT_THROW(Group("bad", 2, {0, 1, 1, 1}, {1}, {"x"}), InvalidGroup);
  // generator list that does not generate
  EXPECT_THROW(Group("C2", 2, {0, 1, 1, 0}, {0}, {"x"}), InvalidGroup);
}

TEST(Group, SubgroupEmbedding) {
  GroupPtr d12 = build_dihedral(6), d4 = build_dihedral(2);
  int x3 = d12->mul(d12->mul(d12->generator(0), d12->generator(0)), d12->generator(0));
  auto e = SubgroupEmbedding::from_generator_images(d4, d12, {x3, d12->generator(1)});
  EXPECT_EQ(e.image.size(), 4u);
  EXPECT_THROW(SubgroupEmbedding::from_generator_images(d4, d12, {d12->generator(0), d12->generator(1)}),
               InvalidParameter);
}
