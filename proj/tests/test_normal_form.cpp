#include <gtest/gtest.h>

#include "support.hpp"

using namespace testsupport;

TEST(AbGroup, CanonicalForm) {
  AbGroup g = AbGroup::from_orders(1, {Integer(4), Integer(6), Integer(1)});
  EXPECT_EQ(g.str(), "Z + Z/2 + Z/12");
  EXPECT_EQ(AbGroup::trivial().str(), "0");
  EXPECT_EQ(AbGroup::elementary(2, 3).str(), "Z/2 + Z/2 + Z/2");
  EXPECT_EQ(AbGroup::from_orders(0, {Integer(2), Integer(3)}), AbGroup::cyclic(6));
  EXPECT_EQ(g.torsion().str(), "Z/2 + Z/12");
  EXPECT_EQ(g.torsion_order().str(), "24");
  EXPECT_THROW(AbGroup::from_orders(0, {Integer(0)}), InvalidParameter);
}

TEST(NormalForm, HandWorkedSmith) {
  // diag(2, 3) ~ Z/6; [[2, 4], [6, 8]] has invariants 2, 4
  EXPECT_EQ(cokernel(IntMatrix{{2, 0}, {0, 3}}).str(), "Z/6");
  EXPECT_EQ(cokernel(IntMatrix{{2, 4}, {6, 8}}).str(), "Z/2 + Z/4");
  EXPECT_EQ(cokernel(IntMatrix{{1, 2, 3}}).str(), "0");
  EXPECT_EQ(cokernel(IntMatrix{{0}, {0}}).str(), "Z^2");
  auto s = snf(IntMatrix{{2, 4}, {6, 8}});
  EXPECT_EQ(s.rank, 2u);
  ASSERT_EQ(s.invariant_factors.size(), 2u);
  EXPECT_EQ(s.invariant_factors[0].str(), "2");
  EXPECT_EQ(s.invariant_factors[1].str(), "4");
}

TEST(NormalForm, HermiteShape) {
  IntMatrix m{{3, 6, 9}, {4, 8, 13}};
  auto h = hnf(m);
  EXPECT_EQ(h.rank, 2u);
  EXPECT_EQ(m * h.u, h.h);
  EXPECT_TRUE(h.h(0, 2).is_zero() && h.h(1, 2).is_zero());
  EXPECT_EQ(image_basis(m), IntMatrix({{3, 0}, {0, 1}}));
}

TEST(NormalForm, KernelSolveSaturate) {
  IntMatrix m{{1, 2, 3}, {2, 4, 6}};
  IntMatrix k = kernel_basis(m);
  EXPECT_EQ(k.cols(), 2u);
  EXPECT_TRUE((m * k).is_zero());
  EXPECT_EQ(rank(m), 1u);

  IntMatrix a{{2, 0}, {0, 3}};
  auto x = solve_integer(a, IntMatrix{{4}, {9}});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, IntMatrix({{2}, {3}}));
  EXPECT_FALSE(solve_integer(a, IntMatrix{{1}, {0}}));

  IntMatrix b{{2}, {4}};
  EXPECT_EQ(saturate(b), IntMatrix({{1}, {2}}));
  EXPECT_TRUE(same_span(IntMatrix{{1, 1}, {0, 1}}, IntMatrix::identity(2)));
  EXPECT_FALSE(same_span(IntMatrix{{2, 0}, {0, 1}}, IntMatrix::identity(2)));
}

TEST(NormalForm, AgreesWithOracleOnRandomMatrices) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    IntMatrix m = random_matrix(rng, static_cast<std::size_t>(uniform(rng, 1, 6)), static_cast<std::size_t>(uniform(rng, 1, 6)), -20, 20);
    EXPECT_EQ(cokernel(m), oracle_cokernel(m)) << matrix_to_string(m);
  }
}

TEST(NormalForm, LargeEntriesStayExact) {
  IntMatrix m{{1, 0}, {0, 1}};
  m(0, 0) = Integer("1000000000000000000000");
  m(1, 1) = Integer("1500000000000000000000");
  AbGroup g = cokernel(m);
  ASSERT_EQ(g.factors.size(), 2u);
  EXPECT_EQ(g.factors[0].str(), "500000000000000000000");
  EXPECT_EQ(g.factors[1].str(), "3000000000000000000000");
}

TEST(IntMatrix, SerializationRoundTrip) {
  Rng rng(3);
  IntMatrix m = random_matrix(rng, 4, 5, -100, 100);
  m(2, 3) = Integer("-98765432109876543210");
  EXPECT_EQ(matrix_from_string(matrix_to_string(m)), m);
  EXPECT_EQ(kronecker(IntMatrix{{1, 2}}, IntMatrix{{1}, {3}}), IntMatrix({{1, 2}, {3, 6}}));
}
