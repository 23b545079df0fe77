#include <gtest/gtest.h>

#include "support.hpp"

using namespace testsupport;

TEST(GroupRing, NormAndPartialNorm) {
  GroupPtr g = build_dihedral(4);
  RingElement x = RingElement::element(g, g->generator(0));
  RingElement nx = partial_norm(g, g->generator(0));
  EXPECT_EQ(augmentation(nx).str(), "4");
  EXPECT_TRUE(((x - RingElement::one(g)) * nx).is_zero());
  EXPECT_EQ(norm_element(g) * norm_element(g), Integer(8) * norm_element(g));
}

TEST(GroupRing, StrAndParse) {
  GroupPtr g = build_dihedral(4);
  RingElement r = parse_ring_element(g, "1 - x*y + 2x^3");
  EXPECT_EQ(r.str(), "1 + 2x^3 - x*y");
  EXPECT_EQ(parse_ring_element(g, r.str()), r);
  EXPECT_EQ(parse_ring_element(g, "x^-1"), parse_ring_element(g, "x^3"));
  EXPECT_EQ(parse_ring_element(g, "(x*y)^2"), RingElement::one(g));
  EXPECT_EQ(parse_ring_element(g, "0").str(), "0");
  try {
    parse_ring_element(g, "1 + q");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_ring_element(g, "1 +"), ParseError);
  EXPECT_THROW(parse_ring_element(g, ""), ParseError);
}

TEST(GroupRing, InvolutionAndWords) {
  GroupPtr g = build_dihedral(3);
  RingElement a = parse_ring_element(g, "2 + x - 3x*y");
  EXPECT_EQ(involution(a), parse_ring_element(g, "2 + x^2 - 3x*y"));
  EXPECT_EQ(word_to_ring(g, {{"x", 1}, {"y", -1}}), parse_ring_element(g, "x*y"));
}

TEST(GroupRing, GroupMismatch) {
  RingElement a = RingElement::one(build_cyclic(2)), b = RingElement::one(build_cyclic(2));
  EXPECT_THROW(a * b, GroupMismatch);  // distinct group objects
  EXPECT_THROW(RingElement(build_cyclic(3), IntVector(2)), DimensionMismatch);
}
