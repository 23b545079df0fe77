#include <gtest/gtest.h>

#include "support.hpp"

using namespace testsupport;

namespace {

RingElement r(const GroupPtr& g, const char* text) { return parse_ring_element(g, text); }

}  // namespace

TEST(Constructions, NamedRanks) {
  for (const auto& g : small_groups()) {
    std::size_t n = static_cast<std::size_t>(g->order());
    EXPECT_EQ(augmentation_ideal(g).lattice.rank(), n - 1);
    EXPECT_EQ(ideal_i2(g).lattice.rank(), n);
    EXPECT_EQ(norm_two(g).lattice.rank(), n);
    EXPECT_EQ(zpi_mod_norm(g).lattice.rank(), n - 1);
    EXPECT_EQ(build_named(g, NamedKind::Free, 2).rank(), 2 * n);
  }
}

TEST(Constructions, DualPairs) {
  // I* = ZG/N and I2* = (N, 2) up to isomorphism; compare Ĥ0 and Ĥ-1.
  for (int n : {2, 3, 4}) {
    GroupPtr g = build_dihedral(n);
    Lattice di = dual_lattice(augmentation_ideal(g).lattice), q = zpi_mod_norm(g).lattice;
    EXPECT_EQ(tate_h0(di), tate_h0(q));
    EXPECT_EQ(tate_h_minus1(di), tate_h_minus1(q));
    Lattice d2 = dual_lattice(ideal_i2(g).lattice), n2 = norm_two(g).lattice;
    EXPECT_EQ(tate_h0(d2), tate_h0(n2));
    EXPECT_EQ(tate_h_minus1(d2), tate_h_minus1(n2));
  }
}

TEST(Constructions, SyzygySequence) {
  for (int n : {2, 4, 6}) {
    DihedralSyzygy s = dihedral_syzygy(n);
    EXPECT_EQ(s.kernel.lattice.rank(), static_cast<std::size_t>(4 * n - 1));
    EXPECT_TRUE(s.exactness().ok()) << n;
    const GroupPtr& g = s.group;
    std::vector<RingElement> row1{r(g, "1 + y"), -partial_norm(g, g->generator(0)), Integer(2) * RingElement::one(g)};
    ASSERT_TRUE(s.in_kernel(row1));
    EXPECT_EQ(s.j_value(row1), Integer(2) * RingElement::one(g));
    std::vector<RingElement> row2{r(g, "x - 1"), RingElement(g), r(g, "x - 1")};
    ASSERT_TRUE(s.in_kernel(row2));
    EXPECT_EQ(s.j_value(row2), r(g, "x - 1"));
    std::vector<RingElement> row3{RingElement(g), RingElement(g), r(g, "y - 1")};
    ASSERT_TRUE(s.in_kernel(row3));
    EXPECT_EQ(s.j_value(row3), r(g, "y - 1"));
    std::vector<RingElement> bad{RingElement::one(g), RingElement(g), RingElement(g)};
    EXPECT_FALSE(s.in_kernel(bad));
    EXPECT_THROW(s.j_value(bad), InvalidParameter);
  }
}

TEST(Constructions, CosyzygySequence) {
  for (int n : {2, 4, 6}) {
    DihedralCosyzygy c = dihedral_cosyzygy(n);
    EXPECT_TRUE(c.exactness().ok()) << n;
    const GroupPtr& g = c.group;
    EXPECT_EQ(c.j_value({RingElement::one(g), RingElement(g), RingElement(g)}), r(g, "x - 1"));
    EXPECT_EQ(c.j_value({-r(g, "y"), -RingElement::one(g), RingElement(g)}), r(g, "y - 1"));
    EXPECT_EQ(c.cokernel.lattice.rank(), static_cast<std::size_t>(4 * n - 1));
  }
}

TEST(Constructions, OddNIsOutOfScope) {
  EXPECT_THROW(dihedral_syzygy(3), InvalidParameter);
  EXPECT_THROW(dihedral_cosyzygy(5), InvalidParameter);
  try {
    dihedral_syzygy(3);
  } catch (const InvalidParameter& e) {
    EXPECT_NE(std::string(e.what()).find("4-periodic"), std::string::npos);
  }
}

TEST(Constructions, FourTermSequence) {
  for (int n : {2, 3, 4, 5, 6}) {
    EXPECT_TRUE(quaternion_exactness(n).exact()) << n;
    EXPECT_FALSE(quaternion_exactness(n, true).exact()) << n;
  }
}

TEST(Constructions, GammaQuotients) {
  for (int n : {2, 4}) {
    GammaQuotient d = quotient_D(n);
    EXPECT_TRUE(d.gamma_inclusion.is_injective());
    EXPECT_EQ(tate_h0(d.quotient.lattice).str(), "Z/2 + Z/2") << n;
    GammaQuotient f = quotient_F(n);
    EXPECT_TRUE(f.gamma_inclusion.is_injective());
  }
}

TEST(Constructions, PresentationIndependence) {
  // Syzygies of two presentations agree up to free summands, and ker d2 is a
  // third syzygy of Z, so its Ĥ0 is H3(G; Z).
  for (int n : {2, 3, 4, 5, 6}) {
    GroupPtr g = build_dihedral(n);
    std::string p = "<x, y | x^" + std::to_string(n) + ", y^2, (x*y)^2>";
    PresentationComplex other = presentation_complex(parse_presentation(p), g);
    AbGroup a = tate_h0(kerd2(g)), b = tate_h0(syzygy_lattice(other).lattice);
    EXPECT_EQ(a, b) << n;
    if (n == 2) {
      EXPECT_EQ(a.str(), "Z/2 + Z/2 + Z/2");
    }
    if (n == 3) {
      EXPECT_EQ(a.str(), "Z/6");
    }
    if (n == 4) {
      EXPECT_EQ(a.str(), "Z/2 + Z/2 + Z/4");
    }
    EXPECT_EQ(tate_h0(cokerd2(g)), tate_h0(cosyzygy_lattice(other).lattice)) << n;
  }
}

TEST(Constructions, Counterexample) {
  Counterexample c = counterexample_D8xZ2();
  EXPECT_EQ(c.group->order(), 16);
  EXPECT_EQ(c.j.lattice.rank(), 63u);
  EXPECT_EQ(c.jstar.lattice.rank(), 63u);
}

TEST(Constructions, DihedralParameter) {
  EXPECT_EQ(dihedral_parameter(*build_dihedral(6)), 6);
  EXPECT_FALSE(dihedral_parameter(*build_quaternion(2)).has_value());
  EXPECT_FALSE(dihedral_parameter(*build_cyclic(4)).has_value());
}
